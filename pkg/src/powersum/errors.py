"""Exception hierarchy shared by every powersum module."""


class PowersumError(Exception):
    """Base class for all errors raised by powersum."""


class ResourceLimit(PowersumError):
    """A computation hit a configured effort cap."""


class FactorizationIncomplete(ResourceLimit):
    def __init__(self, n, cofactor):
        self.n = n
        self.cofactor = cofactor
        super().__init__(f"could not split cofactor {cofactor} of {n} within the effort budget")


class NotFound(ResourceLimit):
    def __init__(self, what, j_max):
        self.j_max = j_max
        super().__init__(f"{what} not found with j <= {j_max}")


class NotCoprime(PowersumError, ValueError):
    pass


class EvenModulus(PowersumError, ValueError):
    pass


class DepthInvalid(PowersumError, ValueError):
    pass


class Unsolvable(PowersumError):
    """No exponent vector t gives prod d_i^t_i == -1 mod c."""


class CongruenceFails(PowersumError, ValueError):
    pass


class KeyNumberInvalid(PowersumError, AssertionError):
    """Internal consistency failure: a computed key number does not square to -D."""


class ParamOutOfRange(PowersumError, ValueError):
    pass


class PremiseFails(PowersumError, ValueError):
    pass
