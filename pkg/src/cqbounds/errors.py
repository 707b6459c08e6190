"""Exception hierarchy.

Every error raised on bad input derives from :class:`ValidationError` so the
CLI can map it to a single exit code; numerical and size failures get their
own branches.
"""

from __future__ import annotations


class CQBoundsError(Exception):
    """Base class for all package errors."""


class ValidationError(CQBoundsError, ValueError):
    """Input violates a documented precondition."""


class NotHermitian(ValidationError):
    pass


class NotPSD(ValidationError):
    pass


class DimensionMismatch(ValidationError):
    pass


class InvalidState(ValidationError):
    pass


class NotBinary(ValidationError):
    pass


class OutOfRange(ValidationError):
    """A scalar argument lies outside its admissible interval."""


class LengthMismatch(ValidationError):
    pass


class IndexOutOfRange(ValidationError, IndexError):
    pass


class ParseError(ValidationError):
    """Malformed channel or code file; ``line`` is 1-based when known."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class NoConvergence(CQBoundsError, ArithmeticError):
    pass


class DimensionOverflow(CQBoundsError):
    def __init__(self, dim: int, cap: int):
        self.dim = dim
        self.cap = cap
        super().__init__(f"dimension {dim} exceeds cap {cap}")
