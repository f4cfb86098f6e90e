"""Exponent lattices attached to (d_1, ..., d_n) modulo odd c.

U is the lattice of t in Z^n with prod d_i^t_i == 1 mod c, U' = {s : 2s in U}.
From these come the parity-class count p (size of U mod 2, or 0 when
prod d_i^t_i == -1 has no solution), the group M of square roots of 1
reachable as products of the d_i, and q = #M / 2. The identity p*q = 2^(n-1)
holds for every solvable instance.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from math import prod

from .errors import Unsolvable
from .instance import Instance
from .modmath import mult_order

BOX_LIMIT = 20_000

Vector = tuple[int, ...]


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


def _insert(basis: dict[int, list[int]], v: list[int]) -> None:
    """Add v to the lattice spanned by an echelon basis {pivot column: row}."""
    n = len(v)
    for col in range(n):
        if v[col] == 0:
            continue
        if col not in basis:
            basis[col] = v if v[col] > 0 else [-x for x in v]
            return
        b = basis[col]
        g, x, y = _xgcd(b[col], v[col])
        if g < 0:
            g, x, y = -g, -x, -y
        bc, vc = b[col] // g, v[col] // g
        basis[col] = [x * bi + y * vi for bi, vi in zip(b, v)]
        v = [vc * bi - bc * vi for bi, vi in zip(b, v)]


def hnf(rows, n: int) -> list[list[int]]:
    """Row Hermite normal form of the lattice spanned by `rows` (assumed full rank n).

    Upper triangular, positive diagonal, entries above each pivot reduced
    into [0, pivot).
    """
    basis: dict[int, list[int]] = {}
    for r in rows:
        if any(r):
            _insert(basis, list(r))
    if len(basis) != n:
        raise ValueError("lattice is not of full rank")
    out = [basis[i] for i in range(n)]
    # left to right: reducing row k at column i only disturbs columns > i
    for i in range(n):
        piv = out[i][i]
        for k in range(i):
            f = out[k][i] // piv
            if f:
                out[k] = [a - f * b for a, b in zip(out[k], out[i])]
    return out


def _power_table(g: int, c: int, order: int) -> dict[int, int]:
    table = {}
    h = 1
    for e in range(order):
        table[h] = e
        h = h * g % c
    return table


def box_relations(d, c: int) -> list[list[int]]:
    """Basis of U by exhaustive search over the box prod [0, ord(d_i)).

    The last coordinate is solved by table lookup, so the work is the product
    of the first n-1 orders.
    """
    n = len(d)
    orders = [mult_order(x, c) for x in d]
    gens = [[orders[i] if j == i else 0 for j in range(n)] for i in range(n)]
    last = _power_table(d[-1] % c, c, orders[-1])
    ranges = [range(o) for o in orders[:-1]]
    basis: dict[int, list[int]] = {}
    for g in gens:
        _insert(basis, g)
    # walk the box with a running product of the leading coordinates
    powers = [[pow(d[i], e, c) for e in range(orders[i])] for i in range(n - 1)]
    for head in product(*ranges):
        val = prod((powers[i][e] for i, e in enumerate(head)), start=1) % c
        # need d_n^t == val^-1
        target = pow(val, -1, c)
        t_last = last.get(target)
        if t_last is not None:
            v = list(head) + [t_last]
            if any(v):
                _insert(basis, v)
    return hnf([basis[i] for i in sorted(basis)], n)


def subgroup_chain(d, c: int) -> tuple[dict[int, Vector], list[list[int]]]:
    """Enumerate H = <d_1, ..., d_n> mod c with an exponent vector per element.

    Returns (H, relations) where relations[k] = e_k * unit_k - w with e_k the
    index [H_k : H_{k-1}]; the relations form a triangular basis of U.
    """
    n = len(d)
    elems: dict[int, Vector] = {1 % c: (0,) * n}
    rels = []
    for k in range(n):
        g = d[k] % c
        h, e = g, 1
        while h not in elems:
            h = h * g % c
            e += 1
        row = [-x for x in elems[h]]
        row[k] += e
        rels.append(row)
        grown: dict[int, Vector] = {}
        for val, vec in elems.items():
            v = val
            for i in range(e):
                grown.setdefault(v, vec[:k] + (i,) + vec[k + 1 :])
                v = v * g % c
        elems = grown
    return elems, rels


def unit_lattice(inst: Instance, method: str = "auto") -> list[list[int]]:
    """HNF basis of U = {t : prod d_i^t_i == 1 mod c}.

    method "box" searches the exponent box, "group" uses the subgroup chain;
    "auto" picks the box when its volume is at most BOX_LIMIT.
    """
    inst.require_odd()
    d, c, n = inst.d, inst.c, inst.n
    if method == "auto":
        volume = prod(mult_order(x, c) for x in d[:-1])
        method = "box" if volume <= BOX_LIMIT else "group"
    if method == "box":
        return box_relations(d, c)
    if method == "group":
        return hnf(subgroup_chain(d, c)[1], n)
    raise ValueError(f"unknown method {method!r}")


def _residue(d, t, c: int) -> int:
    out = 1
    for base, e in zip(d, t):
        # negative exponents go through the modular inverse
        out = out * pow(base, e, c) % c
    return out


def gf2_span(rows) -> set[Vector]:
    """All GF(2) combinations of the given 0/1 rows."""
    span = {tuple(0 for _ in rows[0])} if rows else set()
    for r in rows:
        r2 = tuple(x % 2 for x in r)
        span |= {tuple((a + b) % 2 for a, b in zip(v, r2)) for v in span}
    return span


def reduce_to_box(t, basis) -> Vector:
    """Lexicographically least nonnegative representative of t + U, via the HNF pivots."""
    t = list(t)
    for i, row in enumerate(basis):
        f = t[i] // row[i]
        if f:
            t = [a - f * b for a, b in zip(t, row)]
    return tuple(t)


def _closure(gens, c: int) -> list[int]:
    group = {1 % c}
    frontier = [1 % c]
    while frontier:
        nxt = []
        for h in frontier:
            for g in gens:
                v = h * g % c
                if v not in group:
                    group.add(v)
                    nxt.append(v)
        frontier = nxt
    return sorted(group)


@dataclass(frozen=True)
class LatticeInvariants:
    U_basis: list[list[int]]
    p: int
    M: list[int]
    q: Fraction
    solvable: bool
    parity_classes: list[Vector] = field(default_factory=list)
    witness: Vector | None = None


def square_root_group(inst: Instance) -> list[int]:
    """M as the image of U' = {s : 2s in U} under s -> prod d_i^s_i mod c."""
    half = unit_lattice(Instance(inst.c, tuple(x * x for x in inst.d)))
    return _closure([_residue(inst.d, row, inst.c) for row in half], inst.c)


def invariants(inst: Instance) -> LatticeInvariants:
    inst.require_odd()
    c = inst.c
    basis = unit_lattice(inst)
    elems, _ = subgroup_chain(inst.d, c)
    M = square_root_group(inst)
    q = Fraction(len(M), 2)
    w = elems.get(c - 1)
    if w is None:
        return LatticeInvariants(basis, 0, M, q, False, [], None)
    t0 = reduce_to_box(w, basis)
    assert _residue(inst.d, t0, c) == c - 1
    span = gf2_span(basis)
    classes = sorted({tuple((a + b) % 2 for a, b in zip(t0, v)) for v in span})
    return LatticeInvariants(basis, len(classes), M, q, True, classes, t0)


@dataclass(frozen=True)
class PQCheck:
    p: int
    q: Fraction
    product: Fraction
    expected: int
    ok: bool


def check_pq(inst: Instance) -> PQCheck:
    inv = invariants(inst)
    if not inv.solvable:
        raise Unsolvable(f"no t with prod d_i^t_i == -1 mod {inst.c}")
    expected = 2 ** (inst.n - 1)
    product_ = inv.p * inv.q
    return PQCheck(inv.p, inv.q, product_, expected, product_ == expected)
