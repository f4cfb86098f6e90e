"""Arbitrary-precision modular arithmetic.

Factorization, multiplicative orders, inverses, CRT, square roots of -D
modulo odd c, and multiplicative independence of a list of integers.
Everything works on Python ints; numpy is only used to sieve small primes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Iterable, Sequence

import numpy as np

from .errors import EvenModulus, FactorizationIncomplete, NotCoprime

TRIAL_LIMIT = 10**6
RHO_ITERATIONS = 200_000

# deterministic Miller-Rabin for n < 3.317e24 with these bases
_DETERMINISTIC_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
_DETERMINISTIC_LIMIT = 3_317_044_064_679_887_385_961_981


@lru_cache(maxsize=4)
def small_primes(limit: int = TRIAL_LIMIT) -> tuple[int, ...]:
    """All primes <= limit, by a numpy sieve."""
    if limit < 2:
        return ()
    sieve = np.ones(limit + 1, dtype=bool)
    sieve[:2] = False
    sieve[4::2] = False
    for p in range(3, math.isqrt(limit) + 1, 2):
        if sieve[p]:
            sieve[p * p :: 2 * p] = False
    return tuple(int(p) for p in np.flatnonzero(sieve))


def mr_bases(n: int, rounds: int = 64) -> tuple[int, ...]:
    """Fixed Miller-Rabin base schedule: the first `rounds` primes."""
    if n < _DETERMINISTIC_LIMIT:
        return _DETERMINISTIC_BASES
    return small_primes(400)[:rounds]


def is_probable_prime(n: int, rounds: int = 64) -> bool:
    """Miller-Rabin with a fixed base schedule.

    Exact below 3.3e24; above that, `rounds` prime bases are used, so the
    verdict is reproducible run to run.
    """
    if n < 2:
        return False
    for p in _DETERMINISTIC_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in mr_bases(n, rounds):
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class Factorization:
    value: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        prod = 1
        last = 1
        for p, e in self.factors:
            if p <= last or e < 1:
                raise ValueError(f"malformed factorization {self.factors}")
            last = p
            prod *= p**e
        if prod != self.value:
            raise ValueError(f"factors {self.factors} do not multiply to {self.value}")

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    @property
    def omega(self) -> int:
        """Number of distinct prime divisors."""
        return len(self.factors)

    def prime_powers(self) -> list[int]:
        return [p**e for p, e in self.factors]


def _rho(n: int, seed: int, budget: int) -> int | None:
    """Brent's variant of Pollard rho with x -> x^2 + seed. Returns a factor or None."""
    y, r, q = 2, 1, 1
    g = 1
    x = ys = 2
    spent = 0
    m = 128
    while g == 1:
        x = y
        for _ in range(r):
            y = (y * y + seed) % n
        k = 0
        while k < r and g == 1:
            ys = y
            for _ in range(min(m, r - k)):
                y = (y * y + seed) % n
                q = q * abs(x - y) % n
            g = math.gcd(q, n)
            k += m
        spent += r
        r *= 2
        if spent > budget:
            return None
    if g == n:
        while True:
            ys = (ys * ys + seed) % n
            g = math.gcd(abs(x - ys), n)
            if g > 1:
                break
    return g if g != n else None


def _split(n: int, budget: int) -> list[int]:
    """Prime factors (with multiplicity) of n, which has no factor below the trial limit."""
    if n == 1:
        return []
    if is_probable_prime(n):
        return [n]
    r = math.isqrt(n)
    if r * r == n:
        return _split(r, budget) * 2
    for seed in range(1, 21):
        f = _rho(n, seed, budget)
        if f is not None:
            return _split(f, budget) + _split(n // f, budget)
    raise FactorizationIncomplete(n, n)


@lru_cache(maxsize=65536)
def factorize(n: int, trial_limit: int = TRIAL_LIMIT, rho_iterations: int = RHO_ITERATIONS) -> Factorization:
    """Trial division up to `trial_limit`, then Pollard rho capped at `rho_iterations`."""
    if n < 1:
        raise ValueError(f"factorize needs n >= 1, got {n}")
    out: dict[int, int] = {}
    m = n
    for p in small_primes(trial_limit):
        if p * p > m:
            break
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            out[p] = e
    if m > 1:
        if m <= trial_limit * trial_limit:
            out[m] = out.get(m, 0) + 1
        else:
            try:
                parts = _split(m, rho_iterations)
            except FactorizationIncomplete as exc:
                raise FactorizationIncomplete(n, exc.cofactor) from None
            for p in parts:
                out[p] = out.get(p, 0) + 1
    return Factorization(n, tuple(sorted(out.items())))


def as_factorization(c: int | Factorization) -> Factorization:
    return c if isinstance(c, Factorization) else factorize(c)


def euler_phi(c: int | Factorization) -> int:
    f = as_factorization(c)
    out = 1
    for p, e in f.factors:
        out *= (p - 1) * p ** (e - 1)
    return out


def carmichael(c: int | Factorization) -> int:
    """Exponent of the unit group mod c."""
    f = as_factorization(c)
    lam = 1
    for p, e in f.factors:
        if p == 2 and e >= 3:
            part = 2 ** (e - 2)
        else:
            part = (p - 1) * p ** (e - 1)
        lam = lam * part // math.gcd(lam, part)
    return lam


def inverse_mod(a: int, c: int) -> int:
    if math.gcd(a, c) != 1:
        raise NotCoprime(f"{a} is not invertible mod {c}")
    return pow(a, -1, c)


def mult_order(a: int, c: int) -> int:
    """Least mu >= 1 with a^mu == 1 mod c."""
    if c < 2:
        raise ValueError("modulus must exceed 1")
    if math.gcd(a, c) != 1:
        raise NotCoprime(f"gcd({a}, {c}) > 1")
    a %= c
    order = carmichael(c)
    for p, _ in factorize(order).factors:
        while order % p == 0 and pow(a, order // p, c) == 1:
            order //= p
    return order


def crt(residues: Sequence[int], moduli: Sequence[int]) -> int:
    """Combine pairwise coprime congruences; result in [0, prod(moduli))."""
    x, m = 0, 1
    for r, n in zip(residues, moduli):
        t = (r - x) * pow(m, -1, n) % n
        x += m * t
        m *= n
    return x % m


def signed(x: int, c: int) -> int:
    """Representative of x mod c in [-(c-1)/2, (c-1)/2] (c odd)."""
    x %= c
    return x - c if x > c // 2 else x


def sqrt_mod_prime(a: int, p: int) -> int | None:
    """A square root of a modulo odd prime p (Tonelli-Shanks), or None."""
    a %= p
    if a == 0:
        return 0
    if pow(a, (p - 1) // 2, p) != 1:
        return None
    if p % 4 == 3:
        return pow(a, (p + 1) // 4, p)
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while pow(z, (p - 1) // 2, p) != p - 1:
        z += 1
    m, cc, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(cc, 1 << (m - i - 1), p)
        m, cc = i, b * b % p
        t, r = t * cc % p, r * b % p
    return r


def hensel_lift_sqrt(a: int, p: int, k: int, root: int) -> int:
    """Lift root (root^2 == a mod p, p odd, p not dividing a) to a root mod p^k."""
    r = root % p
    pk = p
    for _ in range(1, k):
        pk *= p
        # Newton step: r <- r - (r^2 - a) / (2r)
        r = (r - (r * r - a) * pow(2 * r, -1, pk)) % pk
    return r


def sqrt_mod_prime_power(a: int, p: int, k: int) -> list[int]:
    """Both square roots of a unit a modulo p^k (p odd), sorted; [] if a is a non-residue."""
    r = sqrt_mod_prime(a, p)
    if r is None:
        return []
    r = hensel_lift_sqrt(a, p, k, r)
    pk = p**k
    return sorted({r, (-r) % pk})


def key_numbers(D: int, c_fact: int | Factorization) -> list[int]:
    """All L with L^2 == -D mod c, as signed residues in [-(c-1)/2, (c-1)/2], sorted.

    The list is empty or has 2^omega entries.
    """
    f = as_factorization(c_fact)
    c = f.value
    if c % 2 == 0:
        raise EvenModulus(f"key numbers need odd c, got {c}")
    if c == 1:
        raise ValueError("c must exceed 1")
    if math.gcd(D, c) != 1:
        raise NotCoprime(f"gcd({D}, {c}) > 1")
    per_prime = []
    moduli = f.prime_powers()
    for p, e in f.factors:
        roots = sqrt_mod_prime_power(-D, p, e)
        if not roots:
            return []
        per_prime.append(roots)
    return sorted(signed(crt(combo, moduli), c) for combo in product(*per_prime))


def rational_rank(rows: Iterable[Sequence[int]]) -> int:
    """Rank over Q of an integer matrix given by rows."""
    mat = [[Fraction(x) for x in row] for row in rows]
    rank = 0
    ncols = len(mat[0]) if mat else 0
    for col in range(ncols):
        pivot = next((i for i in range(rank, len(mat)) if mat[i][col] != 0), None)
        if pivot is None:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        for i in range(len(mat)):
            if i != rank and mat[i][col] != 0:
                ratio = mat[i][col] / mat[rank][col]
                mat[i] = [x - ratio * y for x, y in zip(mat[i], mat[rank])]
        rank += 1
    return rank


def multiplicatively_independent(d: Sequence[int]) -> bool:
    """True iff prod d_i^e_i == 1 forces e == 0, i.e. log d_i independent over Z."""
    if any(x <= 1 for x in d):
        raise ValueError("all d_i must exceed 1")
    facts = [factorize(x) for x in d]
    primes = sorted({p for f in facts for p in f.primes})
    rows = [[dict(f.factors).get(p, 0) for p in primes] for f in facts]
    return rational_rank(rows) == len(d)
