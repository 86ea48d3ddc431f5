"""Exception hierarchy shared by all modules."""


class NthPowerError(Exception):
    """Base class for every error raised by this package."""


class InvalidExponent(NthPowerError, ValueError):
    pass


class NotDivisibleByAB(NthPowerError, ArithmeticError):
    pass


class IdentityViolation(NthPowerError, AssertionError):
    """A polynomial identity that must hold did not; indicates a bug."""


class InvalidParams(NthPowerError, ValueError):
    pass


class NotATriple(NthPowerError, ValueError):
    pass


class NotRepresentable(NthPowerError, ValueError):
    """(C-A)(C-B)/2 is not a perfect square, so no M exists for the triple."""


class NoBracket(NthPowerError, ArithmeticError):
    pass


class NegativeRadicand(NthPowerError, ArithmeticError):
    pass


def require_exponent(n: int, minimum: int = 2) -> None:
    if not isinstance(n, int) or isinstance(n, bool) or n < minimum:
        raise InvalidExponent(f"exponent must be an integer >= {minimum}, got {n!r}")
