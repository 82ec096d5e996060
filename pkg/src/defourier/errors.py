"""Exception hierarchy shared across the package."""


class DefourierError(Exception):
    """Base class for all package-specific errors."""


class DomainError(DefourierError, ValueError):
    """An argument lies outside the mathematical domain of the operation."""


class ConvergenceError(DefourierError, RuntimeError):
    """An iteration exhausted its budget without meeting its residual target."""

    def __init__(self, message, residual=None):
        if residual is not None:
            message = f"{message} (final residual {residual:.3e})"
        super().__init__(message)
        self.residual = residual


class BranchAmbiguityError(DefourierError, ValueError):
    """A point could not be attributed to a unique Lambert W branch region."""


class MapPoleError(DefourierError, ValueError):
    """A complex argument hit a pole of a double-exponential map."""


class IntegrandError(DefourierError, RuntimeError):
    """Integrand evaluation failed; carries the offending node."""

    def __init__(self, message, node=None, index=None):
        super().__init__(message)
        self.node = node
        self.index = index


class OracleDisagreementError(DefourierError, RuntimeError):
    """Two independent reference computations disagree beyond tolerance."""


class AutoNonConvergence(DefourierError, RuntimeError):
    """The automatic integrator would exceed its node budget.

    Carries the best available result in ``partial``.
    """

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial
