from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DepthInvalid, EvenModulus, NotCoprime


@dataclass(frozen=True)
class Instance:
    """Equation context: r*X + s*Y = c^z with X, Y built from the bases d.

    Validation covers what every module needs (c >= 2, d_i > 1, gcd(d_i, c) = 1,
    z_max >= 1). The stricter odd-c requirement is checked by `require_odd`
    where it applies.
    """

    c: int
    d: tuple[int, ...]
    z_max: int = 10
    r: int = 1
    s: int = 1

    def __post_init__(self):
        object.__setattr__(self, "d", tuple(int(x) for x in self.d))
        if self.c < 2:
            raise ValueError(f"c must be >= 2, got {self.c}")
        if not self.d:
            raise ValueError("need at least one base d_i")
        if any(x <= 1 for x in self.d):
            raise ValueError(f"bases must exceed 1, got {self.d}")
        if self.r < 1 or self.s < 1:
            raise ValueError("coefficients r, s must be positive")
        for x in self.d:
            if math.gcd(x, self.c) != 1:
                raise NotCoprime(f"gcd({x}, {self.c}) = {math.gcd(x, self.c)}")
        if self.z_max < 1:
            raise DepthInvalid(f"z_max must be >= 1, got {self.z_max}")

    @property
    def n(self) -> int:
        return len(self.d)

    @property
    def plain(self) -> bool:
        return self.r == 1 and self.s == 1

    def require_odd(self) -> None:
        if self.c % 2 == 0 or self.c < 3:
            raise EvenModulus(f"this computation needs odd c > 1, got {self.c}")
