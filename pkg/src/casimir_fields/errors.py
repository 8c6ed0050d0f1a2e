"""Exception types shared across the package."""

__all__ = [
    "CasimirFieldsError",
    "DomainError",
    "DivergesAtBoundary",
    "InvalidDecayScale",
    "NonConvergence",
    "NoSignChange",
    "NotApplicableError",
]


class CasimirFieldsError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(CasimirFieldsError, ValueError):
    """An argument lies outside the physical domain of the operation."""


class DivergesAtBoundary(CasimirFieldsError):
    """The requested quantity diverges as the field point reaches a wall."""


class InvalidDecayScale(CasimirFieldsError, ValueError):
    """The decay scale handed to the integrator is not a positive number."""


class NonConvergence(CasimirFieldsError):
    """Adaptive integration exhausted its subdivision budget.

    The best available estimate is attached as ``result``.
    """

    def __init__(self, message, result=None):
        super().__init__(message)
        self.result = result


class NoSignChange(CasimirFieldsError):
    """A bracketing root search was given an interval without a sign change."""


class NotApplicableError(CasimirFieldsError):
    """The requested diagnostic is undefined for the given model."""
