"""Attach each solution to an ideal pair of Q(sqrt(-D)) through its key number.

A coprime pair (A, B) with A + B == 0 mod c is written A = D1*X^2,
B = D2*Y^2 with D1, D2 squarefree, D = D1*D2. The ideal pair dividing
A - B + 2*sqrt(-AB) is identified by the key number L = D1*X*Y^-1 mod c,
which satisfies L^2 == -D mod c. The pair is unordered, so the tag keeps
the representative of {L, -L} lying in (0, c/2].
"""

from __future__ import annotations

import math
from collections import defaultdict
from dataclasses import dataclass

from .errors import CongruenceFails, KeyNumberInvalid, NotCoprime
from .instance import Instance
from .modmath import factorize, inverse_mod, signed
from .search import Solution


@dataclass(frozen=True, order=True)
class IdealPairTag:
    D: int
    L: int
    omega_c: int = 0

    def key(self) -> tuple[int, int]:
        return (self.D, self.L)


@dataclass(frozen=True)
class Decomposition:
    D: int
    D1: int
    D2: int
    Xr: int
    Yr: int
    J: int = 1


def squarefree_kernel(m: int) -> int:
    """Product of the primes dividing m to an odd power."""
    if m < 1:
        raise ValueError(f"need m >= 1, got {m}")
    out = 1
    for p, e in factorize(m).factors:
        if e % 2:
            out *= p
    return out


def decompose(A: int, B: int) -> Decomposition:
    if math.gcd(A, B) != 1:
        raise NotCoprime(f"gcd({A}, {B}) > 1")
    D1, D2 = squarefree_kernel(A), squarefree_kernel(B)
    Xr, Yr = math.isqrt(A // D1), math.isqrt(B // D2)
    assert D1 * Xr * Xr == A and D2 * Yr * Yr == B
    return Decomposition(D1 * D2, D1, D2, Xr, Yr)


def key_number_of(A: int, B: int, c: int) -> int:
    """Signed key number L == D1*X*Y^-1 mod c of the ideal dividing gamma(A, B)."""
    if math.gcd(A * B, c) != 1:
        raise NotCoprime(f"gcd(A*B, c) > 1 for A={A}, B={B}, c={c}")
    if (A + B) % c:
        raise CongruenceFails(f"A + B = {A + B} is not 0 mod {c}")
    dec = decompose(A, B)
    L = signed(dec.D1 * dec.Xr * inverse_mod(dec.Yr, c), c)
    if (L * L + dec.D) % c:
        raise KeyNumberInvalid(f"L={L} does not satisfy L^2 == -{dec.D} mod {c}")
    return L


def canonical(L: int, c: int) -> int:
    """Representative of {L, -L} mod c in (0, c/2]."""
    r = L % c
    return min(r, c - r)


def association_tag(sol: Solution, inst: Instance) -> IdealPairTag:
    inst.require_odd()
    dec = decompose(sol.A, sol.B)
    L = key_number_of(sol.A, sol.B, inst.c)
    return IdealPairTag(dec.D, canonical(L, inst.c), factorize(inst.c).omega)


@dataclass
class Grouping:
    tags: dict[IdealPairTag, list[Solution]]
    parity: dict[Solution, tuple[int, ...]]

    def tags_by_parity(self) -> dict[tuple[int, ...], set[IdealPairTag]]:
        out: dict[tuple[int, ...], set[IdealPairTag]] = defaultdict(set)
        for tag, sols in self.tags.items():
            for s in sols:
                out[self.parity[s]].add(tag)
        return dict(out)


def group_by_association(sols, inst: Instance) -> Grouping:
    """Partition solutions by ideal-pair tag and label each with its parity vector."""
    inst.require_odd()
    tags: dict[IdealPairTag, list[Solution]] = defaultdict(list)
    parity = {}
    for s in sols:
        tags[association_tag(s, inst)].append(s)
        parity[s] = s.parity
    return Grouping(dict(sorted(tags.items())), parity)
