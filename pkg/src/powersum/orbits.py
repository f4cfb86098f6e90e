"""Orbit structure of the solutions attached to one ideal pair.

For a tag (D, L) let j be least with c^(2j) = u^2 + D*v^2 where u + v*sqrt(-D)
generates the 2j-th power of the ideal with key number L, and v^2*D is
divisible by every prime dividing the bases. Every solution with that tag
then has z = j*t and

    A = (c^(jt) - |u_t|) / 2,   B = (c^(jt) + |u_t|) / 2,

with u_t + v_t*sqrt(-D) = (u + v*sqrt(-D))^t. At most one tag carries two
solutions, and then the pair has one of two exceptional shapes (see
`detect_case`).
"""

from __future__ import annotations

import math
from collections import defaultdict
from dataclasses import dataclass, field

from .classify import IdealPairTag, association_tag
from .errors import NotFound
from .instance import Instance
from .modmath import crt, factorize, hensel_lift_sqrt
from .search import Solution, distinct_values, representations

J_MAX = 12


@dataclass(frozen=True)
class OrbitSeed:
    j: int
    u: int
    v: int
    D: int


@dataclass(frozen=True)
class CaseReport:
    kind: str  # "none", "case1" or "case2"
    nu: int | None = None
    partner: tuple[int, int, int] | None = None


def cornacchia(D: int, m: int, root: int) -> tuple[int, int] | None:
    """Primitive x^2 + D*y^2 = m (x, y >= 0) attached to a root of -D mod m, if any."""
    if not 0 < D < m:
        return None
    limit = math.isqrt(m)
    for r0 in (root % m, (-root) % m):
        a, b = m, r0
        while b > limit:
            a, b = b, a % b
        rest = m - b * b
        if rest % D:
            continue
        y2 = rest // D
        y = math.isqrt(y2)
        if y * y == y2 and y > 0 and math.gcd(b, y) == 1:
            return b, y
    return None


def lifted_key(L: int, D: int, c: int, k: int) -> int:
    """The square root of -D mod c^k congruent to L mod c."""
    f = factorize(c)
    residues, moduli = [], []
    for p, e in f.factors:
        residues.append(hensel_lift_sqrt(-D, p, e * k, L % p))
        moduli.append(p ** (e * k))
    s = crt(residues, moduli)
    assert (s * s + D) % (c**k) == 0 and (s - L) % c == 0
    return s


def _prime_set(d) -> set[int]:
    return {p for x in d for p in factorize(x).primes}


def minimal_pair_power(tag: IdealPairTag, inst: Instance, j_max: int = J_MAX) -> OrbitSeed:
    inst.require_odd()
    c, D, L = inst.c, tag.D, tag.L
    primes = _prime_set(inst.d)
    for j in range(1, j_max + 1):
        m = c ** (2 * j)
        s = lifted_key(L, D, c, 2 * j)
        found = cornacchia(D, m, s)
        if found is None:
            continue
        x, y = found
        cands = [(x, y), (-x, y)]
        if D == 1:
            # extra units +-i swap the roles of u and v
            cands += [(-y, x), (y, x)]
        for u, v in cands:
            if v <= 0 or (u - v * s) % m:
                continue
            if all((v * v * D) % p == 0 for p in primes):
                return OrbitSeed(j, u, v, D)
    raise NotFound(f"principal power for tag (D={D}, L={L})", j_max)


def orbit_power(seed: OrbitSeed, t: int) -> tuple[int, int]:
    """Coefficients of (u + v*sqrt(-D))^t."""
    if t < 1:
        raise ValueError("t must be positive")
    D = seed.D
    u, v = 1, 0
    bu, bv, e = seed.u, seed.v, t
    while e:
        if e & 1:
            u, v = u * bu - D * v * bv, u * bv + v * bu
        bu, bv = bu * bu - D * bv * bv, 2 * bu * bv
        e >>= 1
    assert u * u + D * v * v == (seed.u**2 + D * seed.v**2) ** t
    return u, v


def predicted_solution(seed: OrbitSeed, t: int, c: int) -> tuple[int, int, int]:
    u, v = orbit_power(seed, t)
    cz = c ** (seed.j * t)
    A, B = (cz - abs(u)) // 2, (cz + abs(u)) // 2
    assert A + B == cz and 4 * A * B == v * v * seed.D
    return A, B, seed.j * t


def _exact_log(n: int, base: int) -> int | None:
    e = 0
    while n > 1 and n % base == 0:
        n //= base
        e += 1
    return e if n == 1 else None


def detect_case(A: int, B: int, z: int) -> CaseReport:
    """Classify (A, B, z), A < B, as one of the two exceptional doubling shapes."""
    nu = _exact_log(8 * A + 3, 3)
    if nu is not None and nu > 1 and nu % 2 == 1 and 8 * B + 1 == 3 ** (nu + 1):
        assert A < B
        return CaseReport("case1", nu, (B, 3 ** (2 * nu) * A, 3 * z))
    if B - A == 1:
        return CaseReport("case2", None, (1, 4 * A * B, 2 * z))
    return CaseReport("none")


def representable(value: tuple[int, int, int], inst: Instance) -> bool:
    """Whether (A, B, z) is a solution of X + Y = c^z obeying the support rule for inst.d."""
    A, B, z = value
    if A + B != inst.c**z or A >= B:
        return False
    n = inst.n
    for ex in _support_splits(A, inst.d):
        others = [i for i in range(n) if ex[i] == 0]
        if representations(B, inst.d, others):
            return True
    return False


def _support_splits(A: int, d):
    n = len(d)
    for mask in range(1 << n):
        idxs = [i for i in range(n) if mask >> i & 1]
        yield from representations(A, d, idxs)


@dataclass
class Lemma1Report:
    multiplicity: dict[tuple[int, int], int]
    doubled: list[tuple[int, int]] = field(default_factory=list)
    cases: dict[tuple[int, int], str] = field(default_factory=dict)
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def verify_lemma1(inst: Instance, sols) -> Lemma1Report:
    """At most one solution per ideal pair, except a single pair carrying a Case 1/2 doubling."""
    inst.require_odd()
    by_tag: dict[tuple[int, int], list[tuple[int, int, int]]] = defaultdict(list)
    for value in distinct_values(sols):
        A, B, z = value
        tag = association_tag(Solution(z, A, B, (), ()), inst)
        by_tag[tag.key()].append(value)
    report = Lemma1Report({k: len(v) for k, v in sorted(by_tag.items())})
    for key, values in sorted(by_tag.items()):
        if len(values) == 1:
            continue
        report.doubled.append(key)
        if len(values) > 2:
            report.violations.append(f"tag {key} carries {len(values)} solutions")
            continue
        first, second = sorted(values, key=lambda v: (v[2], v[0]))
        case = detect_case(*first)
        report.cases[key] = case.kind
        if case.kind == "none" or case.partner != second:
            report.violations.append(f"tag {key}: {first} and {second} are not a Case 1/2 pair")
    if len(report.doubled) > 1:
        report.violations.append(f"more than one doubled tag: {report.doubled}")
    return report


def orbit_crosscheck(inst: Instance, sols, j_max: int = J_MAX) -> list[str]:
    """Every solution must equal the orbit prediction of its tag's seed; returns mismatches."""
    problems = []
    by_tag: dict[IdealPairTag, list[tuple[int, int, int]]] = defaultdict(list)
    for value in distinct_values(sols):
        A, B, z = value
        by_tag[association_tag(Solution(z, A, B, (), ()), inst)].append(value)
    for tag, values in sorted(by_tag.items()):
        try:
            seed = minimal_pair_power(tag, inst, j_max)
        except NotFound:
            problems.append(f"no seed for tag {tag.key()} within j <= {j_max}")
            continue
        for A, B, z in values:
            if z % seed.j or predicted_solution(seed, z // seed.j, inst.c) != (A, B, z):
                problems.append(f"{(A, B, z)} is not on the orbit of {seed}")
    return problems
