"""Exception hierarchy shared by every layer of the toolkit."""

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from .report import ConditionReport


class WeakCrossedError(Exception):
    """Raised when an operation cannot produce a meaningful result."""

    def __init__(self, message: str):
        super().__init__(message)
        self.message = message


class FieldError(WeakCrossedError):
    """Raised on inexact input, division by zero or mixed fields."""


class ShapeError(WeakCrossedError):
    """Raised when a vector or map does not live in the expected space."""


class NotIdempotentError(WeakCrossedError):
    """Raised when an idempotent was required; ``column`` is the first witness."""

    def __init__(self, message: str, column: int):
        super().__init__(message)
        self.column = column


class InstanceError(WeakCrossedError):
    """Raised when an instance file is malformed."""


class FixtureError(WeakCrossedError):
    """Raised when a fixture is requested with unsupported parameters."""


class AxiomError(WeakCrossedError):
    """Raised by verifying constructors; carries the failing report."""

    def __init__(self, message: str, report: "ConditionReport"):
        super().__init__(message)
        self.report = report


class CrossedError(WeakCrossedError):
    """Raised by crossed-product operations that refuse or fail to verify."""

    def __init__(self, message: str, report: "ConditionReport | None" = None):
        super().__init__(message)
        self.report = report
