"""Exception and warning types shared across the package."""


class BoltzBenchError(Exception):
    """Base class for all package-specific errors."""


class SingularInputError(BoltzBenchError, ValueError):
    """Raised when an operation is evaluated at a singular input (e.g. u == v)."""


class GridError(BoltzBenchError, ValueError):
    """Invalid velocity-grid construction or mismatched grid function."""


class GrazingRayError(BoltzBenchError):
    """Backward ray is tangent to the boundary within tolerance."""


class UnreachableTargetError(BoltzBenchError):
    """Characteristic does not reach the requested layer coordinate."""


class QuadratureError(BoltzBenchError):
    """Adaptive quadrature failed to converge."""


class NonConvergenceError(BoltzBenchError):
    """Iterative solver exceeded its iteration budget."""


class StepRejectionError(BoltzBenchError):
    """Conservation drift along an integrated path exceeded threshold."""


class FitDegenerateError(BoltzBenchError):
    """Decay-fit window is below floating-point noise."""


class InconsistentLimitError(BoltzBenchError):
    """Independent far-field estimates disagree beyond tolerance."""


class PreconditionError(BoltzBenchError, ValueError):
    """An operation's stated precondition was violated."""


class DivergenceWarning(UserWarning):
    """Weighted kernel integral does not decay within the truncated domain."""
