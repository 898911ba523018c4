"""Exception types shared across the package."""


class NodalError(Exception):
    """Base class for errors raised by this package."""


class ParseError(NodalError):
    """Malformed polynomial or fixture text."""

    def __init__(self, message: str, position: int | None = None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class RingMismatchError(NodalError):
    """Operands belong to different rings."""


class ExponentLimitError(NodalError):
    """A per-variable exponent exceeded the representation limit."""


class DegreeCapExceeded(NodalError):
    """A basis computation ran past the configured total-degree cap."""

    def __init__(self, message: str, cap: int):
        super().__init__(message)
        self.cap = cap


class CharacteristicError(NodalError):
    """The characteristic divides a degree that must be invertible."""


class RetryBudgetExceeded(NodalError):
    """Seeded genericity retries were exhausted without a certificate."""


class NonNodalCurveError(NodalError):
    """A curve failed the nodality certificate; the message names why."""


class InvariantViolation(NodalError):
    """An internal cross-check failed; this indicates an engine bug."""
