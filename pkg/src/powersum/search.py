"""Exhaustive enumeration of r*X + s*Y = c^z with X, Y built from fixed bases.

For each index i exactly one of x_i, y_i is positive, so the search runs over
the 2^n ways of assigning indices to the X side, then over bounded exponent
vectors on one side; the other side is recovered by exact division. Every
exponent representation of the complementary term is produced, so
multiplicatively dependent bases (e.g. d = (2, 4)) yield one Solution per
exponent tuple.
"""

from __future__ import annotations

import math
from bisect import bisect_left
from dataclasses import dataclass
from itertools import product

from .errors import DepthInvalid, NotCoprime
from .instance import Instance


@dataclass(frozen=True, order=True)
class Solution:
    z: int
    A: int
    B: int
    x: tuple[int, ...]
    y: tuple[int, ...]

    @property
    def value(self) -> tuple[int, int, int]:
        return (self.A, self.B, self.z)

    @property
    def parity(self) -> tuple[int, ...]:
        return tuple(max(a, b) % 2 for a, b in zip(self.x, self.y))


def products_below(d, idxs, bound: int) -> list[tuple[int, tuple[int, ...]]]:
    """All (value, exponents) with value = prod_{i in idxs} d_i^e_i < bound and each e_i >= 1.

    Exponents are returned as full length-n vectors (zero outside idxs), sorted by value.
    """
    n = len(d)
    out = []

    def walk(k: int, val: int, exps: list[int]):
        if k == len(idxs):
            out.append((val, tuple(exps)))
            return
        i = idxs[k]
        v = val * d[i]
        e = 1
        while v < bound:
            exps[i] = e
            walk(k + 1, v, exps)
            v *= d[i]
            e += 1
        exps[i] = 0

    if bound > 1:
        walk(0, 1, [0] * n)
    out.sort()
    return out


def representations(value: int, d, idxs) -> list[tuple[int, ...]]:
    """Every exponent vector e (zero outside idxs, >= 1 on idxs) with prod d_i^e_i == value."""
    n = len(d)
    out = []

    def walk(k: int, v: int, exps: list[int]):
        if k == len(idxs):
            if v == 1:
                out.append(tuple(exps))
            return
        i = idxs[k]
        e = 0
        while v % d[i] == 0:
            v //= d[i]
            e += 1
            exps[i] = e
            walk(k + 1, v, exps)
        exps[i] = 0

    walk(0, value, [0] * n)
    return out


def _check(sol: Solution, inst: Instance) -> None:
    A, B = sol.A, sol.B
    assert inst.r * A + inst.s * B == inst.c**sol.z
    assert all(min(a, b) == 0 < max(a, b) for a, b in zip(sol.x, sol.y))
    assert math.gcd(A, B) == 1 and math.gcd(A * B, inst.c) == 1


def enumerate_general(inst: Instance) -> list[Solution]:
    """All solutions of r*X + s*Y = c^z, 1 <= z <= z_max, sorted by (z, A, B, x, y).

    X < Y is imposed only when r = s = 1.
    """
    if inst.z_max < 1:
        raise DepthInvalid(f"z_max must be >= 1, got {inst.z_max}")
    if math.gcd(inst.r * inst.s, inst.c) != 1:
        raise NotCoprime(f"gcd(r*s, c) must be 1 (r={inst.r}, s={inst.s}, c={inst.c})")
    d, c, r, s, n = inst.d, inst.c, inst.r, inst.s, inst.n
    top = c**inst.z_max
    found = []
    for sides in product((0, 1), repeat=n):
        xs = [i for i in range(n) if sides[i] == 0]
        ys = [i for i in range(n) if sides[i] == 1]
        # enumerate the side with fewer indices, solve for the other
        if len(xs) <= len(ys):
            own, other, coef_own, coef_other, own_is_x = xs, ys, r, s, True
        else:
            own, other, coef_own, coef_other, own_is_x = ys, xs, s, r, False
        cands = [(1, (0,) * n)] if not own else products_below(d, own, -(-top // coef_own))
        for z in range(1, inst.z_max + 1):
            cz = c**z
            hi = bisect_left(cands, (-(-cz // coef_own),))
            for val, e_own in cands[:hi]:
                rem = cz - coef_own * val
                if rem <= 0 or rem % coef_other:
                    continue
                partner = rem // coef_other
                for e_other in representations(partner, d, other):
                    if own_is_x:
                        X, Y, ex, ey = val, partner, e_own, e_other
                    else:
                        X, Y, ex, ey = partner, val, e_other, e_own
                    if inst.plain and X >= Y:
                        continue
                    sol = Solution(z, X, Y, ex, ey)
                    _check(sol, inst)
                    found.append(sol)
    return sorted(found)


def enumerate_solutions(inst: Instance) -> list[Solution]:
    """Solutions of X + Y = c^z (the r = s = 1 case), one per exponent tuple."""
    if not inst.plain:
        inst = Instance(inst.c, inst.d, inst.z_max)
    return enumerate_general(inst)


def distinct_values(sols) -> list[tuple[int, int, int]]:
    """Collapse exponent-level solutions to distinct (A, B, z); this counts N."""
    return sorted({s.value for s in sols}, key=lambda v: (v[2], v[0], v[1]))


def two_power_search(r: int, s: int, a: int, b: int, c: int, x_max: int, y_max: int, z_max: int):
    """Positive (x, y, z) within bounds solving r*a^x + s*b^y = c^z, sorted by (z, x)."""
    if a < 2 or b < 2:
        raise ValueError("a and b must exceed 1")
    if min(x_max, y_max, z_max) < 1:
        raise DepthInvalid("all bounds must be >= 1")
    if math.gcd(c, r * a) != 1:
        raise NotCoprime(f"c={c} must be prime to r*a={r * a}")
    powers_b = {}
    v = b
    for y in range(1, y_max + 1):
        powers_b[v] = y
        v *= b
    out = []
    for z in range(1, z_max + 1):
        cz = c**z
        ax = a
        for x in range(1, x_max + 1):
            rem = cz - r * ax
            if rem <= 0:
                break
            if rem % s == 0 and rem // s in powers_b:
                out.append((x, powers_b[rem // s], z))
            ax *= a
    return sorted(out, key=lambda t: (t[2], t[0]))
