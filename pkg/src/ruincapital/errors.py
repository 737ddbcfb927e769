"""Exception hierarchy shared across the library.

Every error raised on purpose derives from :class:`RuinCapitalError`, so
callers can catch one base class.  Domain violations additionally derive
from ``ValueError`` to stay friendly to generic numeric code.
"""


class RuinCapitalError(Exception):
    """Base class for all library errors."""


class DomainError(RuinCapitalError, ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class MomentUndefinedError(DomainError):
    """A requested moment does not exist for the given parameters."""


class UnsupportedDistributionError(RuinCapitalError):
    """Operation not available for this family (e.g. Kummer sampling)."""


class ConstantsUnavailableError(RuinCapitalError):
    """Derived model constants require moments that do not exist."""


class IntegrationError(RuinCapitalError):
    """Quadrature failed to reach the requested accuracy.

    ``achieved_error`` carries the estimate reported by the integrator.
    """

    def __init__(self, message, achieved_error=None):
        super().__init__(message)
        self.achieved_error = achieved_error


class NoAdjustmentCoefficientError(RuinCapitalError):
    """Lundberg's equation has no positive root (heavy tail or c <= c*)."""


class ExcludedCaseError(RuinCapitalError):
    """The Cramer approximation is undefined at c = c*."""


class BackendIncompatibleError(RuinCapitalError):
    """A probability backend cannot serve the requested model or query."""


class BracketError(RuinCapitalError):
    """Root bracketing exhausted without enclosing a solution."""


class InfiniteCapitalError(RuinCapitalError):
    """The ultimate capital u_alpha(c) is infinite for c <= c*."""
