"""Exception hierarchy shared by all lyndon2d modules."""


class LyndonError(Exception):
    """Base class for every error raised by this package."""


class InvalidInput(LyndonError):
    """Malformed input: empty string, ragged matrix, bad parameter value."""


class NotPrimitive(LyndonError):
    """The string is an integer power of a shorter string."""


class NotLyndon(LyndonError):
    """The string is not a Lyndon word."""


class NotSufficientlyPeriodic(LyndonError):
    """A row's smallest period exceeds the allowed fraction of its width."""

    def __init__(self, message: str, *, period: int, row: int | None = None):
        super().__init__(message)
        self.period = period
        self.row = row


class NoInverse(LyndonError):
    """No modular inverse exists because the operands share a factor."""


class CapExceeded(LyndonError):
    """The joint period LCM exceeds the enumeration cap."""

    def __init__(self, message: str, *, lcm: int):
        super().__init__(message)
        self.lcm = lcm


class InvalidQuery(LyndonError):
    """Query operands are not comparable (dimensions, fraction, registry)."""
