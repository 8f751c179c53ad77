"""Exception types shared across the toolkit."""
from typing import Any, Optional


class ToolkitError(Exception):
    """Base class for every error raised by the toolkit."""


class InvalidSequenceError(ToolkitError, ValueError):
    """An iterated sequence could not be built or parsed."""


class InvalidInputError(ToolkitError, ValueError):
    """Malformed input other than a sequence (trees, permutations, LP data, ...)."""


class ValuationError(ToolkitError):
    """No admissible monomial reaches the requested Plücker coordinate."""


class VerificationError(ToolkitError):
    """A certificate or cross-check did not hold."""

    def __init__(self, message: str, report: Optional[Any] = None):
        super().__init__(message)
        self.report = report
