"""Known double (and triple) solutions with two bases, and a primality scan.

Entries store each solution as exponent vectors, (x, y, z) meaning
d_1^x_1 d_2^x_2 + d_1^y_1 d_2^y_2 = c^z, and are checked with exact
integer arithmetic. c may be even here.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import ParamOutOfRange, PremiseFails
from .modmath import is_probable_prime, small_primes

Exps = tuple[tuple[int, int], tuple[int, int], int]


@dataclass(frozen=True)
class FamilyEntry:
    family: str
    params: dict
    d: tuple[int, int]
    c: int
    solutions: tuple[Exps, ...]
    verified: bool = False

    def values(self) -> list[tuple[int, int, int]]:
        """Solutions as (A, B, z) with A <= B."""
        out = []
        for x, y, z in self.solutions:
            a, b = _term(self.d, x), _term(self.d, y)
            out.append((min(a, b), max(a, b), z))
        return out


def _term(d, e) -> int:
    return d[0] ** e[0] * d[1] ** e[1]


def check_entry(d, c: int, sols) -> bool:
    """Every solution satisfies the sum exactly and the one-side-per-base support rule."""
    for x, y, z in sols:
        if _term(d, x) + _term(d, y) != c**z:
            return False
        if any(min(a, b) != 0 or max(a, b) == 0 for a, b in zip(x, y)):
            return False
    return True


def _entry(family, params, d, c, sols) -> FamilyEntry:
    return FamilyEntry(family, params, d, c, tuple(sols), check_entry(d, c, sols))


def _f1(k: int, m: int) -> FamilyEntry:
    # (k, (k^m-1)/(k-1), (k^(m+1)-1)/(k-1))
    d2 = (k**m - 1) // (k - 1)
    c = (k ** (m + 1) - 1) // (k - 1)
    return _entry("F1", {"k": k, "m": m}, (k, d2), c, [((m, 0), (0, 1), 1), ((0, 0), (1, 1), 1)])


def _f2(r: int) -> FamilyEntry:
    d2 = 2**r + 1
    return _entry("F2", {"r": r}, (2, d2), 2 ** (r + 1) + 1, [((r, 0), (0, 1), 1), ((0, 0), (r + 2, 1), 2)])


def _f3(r: int) -> FamilyEntry:
    d2 = 2**r - 1
    return _entry("F3", {"r": r}, (2, d2), 2**r + 1, [((1, 0), (0, 1), 1), ((r + 2, 0), (0, 2), 2)])


def _f4(r: int, sign: int) -> FamilyEntry:
    d2 = 2**r + sign
    c = 2 ** (2 * r + 1) + sign * 2 ** (r + 1) + 1
    name = "F4+" if sign > 0 else "F4-"
    return _entry(name, {"r": r}, (2, d2), c, [((2 * r, 0), (0, 2), 1), ((0, 0), (r + 1, 1), 1)])


def _f5(r: int) -> FamilyEntry:
    return _entry("F5", {"r": r}, (2**r - 1, 2**r + 1), 2, [((1, 0), (0, 1), r + 1), ((0, 0), (1, 1), 2 * r)])


def _t2(g: int) -> FamilyEntry:
    # three solutions: 2^(g-1) + d = c, 1 + 2d = c, 1 + 2^(g+1) d = c^2
    d1 = 2 ** (g - 1) - 1
    return _entry(
        "T2", {"g": g}, (d1, 2), 2**g - 1,
        [((0, g - 1), (1, 0), 1), ((0, 0), (1, 1), 1), ((0, 0), (1, g + 1), 2)],
    )


def derive_four(parent: FamilyEntry, name: str) -> FamilyEntry:
    """Replace the base 2 by 4, keeping the solutions whose power of 2 is even."""
    i = parent.d.index(2)
    d = tuple(4 if k == i else v for k, v in enumerate(parent.d))
    sols = []
    for x, y, z in parent.solutions:
        if x[i] % 2 == 0 and y[i] % 2 == 0:
            half = lambda e: tuple(v // 2 if k == i else v for k, v in enumerate(e))
            sols.append((half(x), half(y), z))
    return _entry(name, dict(parent.params), d, parent.c, sols)


FAMILIES = {
    "F1": (("k", 2), ("m", 2)),
    "F2": (("r", 2),),
    "F3": (("r", 2),),
    "F4+": (("r", 1),),
    "F4-": (("r", 2),),
    "F5": (("r", 2),),
    "T2": (("g", 3),),
    "F2d": (("r", 2),),
    "T2d": (("g", 3),),
}


def family_instances(family: str, **ranges) -> list[FamilyEntry]:
    """Entries of one family for every parameter combination in the given ranges.

    Ranges are iterables keyed by parameter name, e.g. family_instances("F1",
    k=range(2, 7), m=range(2, 7)). The derived families F2d and T2d take the
    parent's parameter and skip values where it is odd (the base-4 version
    needs r = 2m, resp. g - 1 = 2m).
    """
    if family not in FAMILIES:
        raise ParamOutOfRange(f"unknown family {family!r}")
    params = FAMILIES[family]
    for name, lo in params:
        vals = list(ranges.get(name, ()))
        if not vals:
            raise ParamOutOfRange(f"family {family} needs a range for {name}")
        if min(vals) < lo:
            raise ParamOutOfRange(f"family {family} needs {name} >= {lo}, got {min(vals)}")
    if family == "F1":
        return [_f1(k, m) for k in ranges["k"] for m in ranges["m"]]
    if family in ("F2", "F3", "F5", "F4+", "F4-"):
        make = {"F2": _f2, "F3": _f3, "F5": _f5, "F4+": lambda r: _f4(r, 1), "F4-": lambda r: _f4(r, -1)}[family]
        return [make(r) for r in ranges["r"]]
    if family == "T2":
        return [_t2(g) for g in ranges["g"]]
    if family == "F2d":
        return [derive_four(_f2(r), "F2d") for r in ranges["r"] if r % 2 == 0]
    return [derive_four(_t2(g), "T2d") for g in ranges["g"] if (g - 1) % 2 == 0]


# (d1, d2, c) and two solutions each as exponent vectors
ANOMALOUS: tuple[tuple[tuple[int, int], int, tuple[Exps, Exps]], ...] = (
    ((3, 13), 2, (((1, 0), (0, 1), 4), ((5, 0), (0, 1), 8))),
    ((2, 89), 91, (((1, 0), (0, 1), 1), ((13, 0), (0, 1), 2))),
    ((3, 10), 13, (((1, 0), (0, 1), 1), ((7, 0), (0, 1), 3))),
    ((2, 3), 259, (((8, 0), (0, 1), 1), ((4, 0), (0, 5), 1))),
    ((2, 91), 8283, (((1, 0), (0, 2), 1), ((13, 0), (0, 1), 1))),
    ((3, 13), 2200, (((1, 0), (0, 3), 1), ((7, 0), (0, 1), 1))),
    ((2, 3), 11, (((1, 0), (0, 2), 1), ((3, 0), (0, 1), 1))),
    ((2, 3), 35, (((3, 0), (0, 3), 1), ((5, 0), (0, 1), 1))),
    ((2, 5), 133, (((3, 0), (0, 3), 1), ((7, 0), (0, 1), 1))),
    ((5, 11), 56, (((5, 0), (0, 1), 2), ((0, 0), (1, 1), 1))),
    ((5, 56), 15681, (((6, 0), (0, 1), 1), ((0, 0), (1, 2), 1))),
    ((2, 11), 3, (((4, 0), (0, 1), 3), ((0, 0), (1, 2), 5))),
    ((8, 35), 99, (((2, 0), (0, 1), 1), ((0, 0), (1, 2), 2))),
    ((10, 41), 411, (((5, 0), (0, 3), 2), ((0, 0), (1, 1), 1))),
)


def anomalous_catalog() -> list[FamilyEntry]:
    return [_entry("anomalous", {}, d, c, sols) for d, c, sols in ANOMALOUS]


@dataclass(frozen=True)
class PairTransform:
    source: tuple[int, int, int]
    triple: tuple[int, int, int]
    sums: tuple[tuple[int, int], tuple[int, int]]
    verified: bool


def pair_transform(a: int, b: int, c: int, q: int, r: int, s: int, t: int) -> PairTransform:
    """From a^q b + 1 = c^r and a^s + b = c^t build the double solution for (a, c, c^r + a^(s+q)).

    The new modulus C satisfies a^q c^t + 1 = C and a^(s+q) + c^r = C.
    """
    if a**q * b + 1 != c**r or a**s + b != c**t:
        raise PremiseFails(f"({a},{b},{c},{q},{r},{s},{t}) does not satisfy a^q b + 1 = c^r, a^s + b = c^t")
    C = c**r + a ** (s + q)
    first = (a**q * c**t, 1)
    second = (a ** (s + q), c**r)
    ok = sum(first) == C and sum(second) == C
    return PairTransform((a, b, c), (a, c, C), (first, second), ok)


@dataclass(frozen=True)
class MersenneQuotient:
    p: int
    t: int
    value: int | None
    digits: int
    verdict: str  # "prime", "composite" or "skipped"
    factor: int | None = None
    bits: int = field(default=0)


def mersenne_quotient(p: int, t: int) -> int:
    small, big = p**t, p ** (t + 1)
    num, den = (1 << big) - 1, (1 << small) - 1
    value, rem = divmod(num, den)
    assert rem == 0 and den * value == num
    return value


def _small_factor(n: int, limit: int = 10**6) -> int | None:
    for q in small_primes(limit):
        if q * q > n:
            break
        if n % q == 0:
            return q
    return None


def mersenne_quotient_scan(p_list, t_max: int = 1, digit_limit: int | None = 400) -> list[MersenneQuotient]:
    """Primality verdicts for (2^(p^(t+1)) - 1)/(2^(p^t) - 1), ordered by (p, t).

    Quotients with more than `digit_limit` decimal digits are skipped; pass
    None to test everything. Composite verdicts carry a small factor when
    trial division to 10^6 finds one.
    """
    out = []
    for p in sorted(p_list):
        for t in range(1, t_max + 1):
            bits = p ** (t + 1) - p**t
            # digit count estimate before building the number
            approx = math.floor(bits * math.log10(2)) + 1
            if digit_limit is not None and approx > digit_limit:
                out.append(MersenneQuotient(p, t, None, approx, "skipped", bits=bits))
                continue
            v = mersenne_quotient(p, t)
            digits = len(str(v))
            if is_probable_prime(v):
                out.append(MersenneQuotient(p, t, v, digits, "prime", bits=v.bit_length()))
            else:
                out.append(MersenneQuotient(p, t, v, digits, "composite", _small_factor(v), bits=v.bit_length()))
    return out
