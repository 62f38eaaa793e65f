"""Exception hierarchy shared by every module."""

from __future__ import annotations


class GelintError(Exception):
    """Base class for all errors raised by gelint."""


class DomainError(GelintError, ValueError):
    """An argument lies outside the domain of the requested operation.

    ``param`` names the offending argument when there is a single culprit.
    """

    def __init__(self, message: str, param: str | None = None):
        super().__init__(message)
        self.param = param


class DivergenceError(DomainError):
    """The requested quantity is infinite (e.g. K at k = 1 when 1/p + 1/r >= 1)."""


class ConvergenceError(GelintError, ArithmeticError):
    """An iterative method hit its cap before meeting the requested tolerance."""

    def __init__(self, message: str, value: float = float("nan"),
                 abs_err_estimate: float = float("inf")):
        super().__init__(message)
        self.value = value
        self.abs_err_estimate = abs_err_estimate


class IntegrandError(GelintError, ArithmeticError):
    """The integrand returned NaN or an infinity at an interior abscissa."""
