"""Exception hierarchy shared by the evaluators, the analysis layer and the CLI."""

from __future__ import annotations

import math


class NicholsonError(Exception):
    """Base class for every error raised by this package."""


class DomainError(NicholsonError, ValueError):
    """An argument lies outside the domain of the requested function."""


class ParityError(DomainError):
    """An odd order was passed where only even orders are defined."""


class ConvergenceError(NicholsonError, ArithmeticError):
    """A quadrature or series did not reach its tolerance.

    The best estimate obtained before giving up is kept on the exception so
    callers can decide whether it is good enough for their purpose.
    """

    def __init__(self, message: str, estimate: float = math.nan, abs_err_est: float = math.inf):
        super().__init__(message)
        self.estimate = estimate
        self.abs_err_est = abs_err_est


class NoExtremumError(NicholsonError):
    """The sampled function has no local extremum inside the search window."""


class FitError(NicholsonError, ValueError):
    """A least-squares fit was requested on unusable data."""
