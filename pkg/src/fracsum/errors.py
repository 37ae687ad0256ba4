"""Exception types shared across the package.

The CLI maps these onto stable exit codes: DomainError and PrecisionError
become exit 3, InsufficientDataError becomes exit 4.
"""


class DomainError(ValueError):
    """An argument violates a documented precondition (bad n, x, s, w, beta)."""


class PrecisionError(ValueError):
    """A precision request cannot be met, or an internal accuracy check failed."""


class InsufficientDataError(ValueError):
    """Too few usable samples to run a fit."""
