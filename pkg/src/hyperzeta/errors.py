"""Exception types shared across the package."""


class HyperzetaError(Exception):
    """Base class for all package-specific errors."""


class DomainError(HyperzetaError):
    """Input lies outside the region where the operation is defined."""


class PoleError(DomainError):
    """Evaluation point coincides with a pole of the function."""


class SingularityError(DomainError):
    """Evaluation point is too close to a singularity of the integrand."""


class EvaluationError(HyperzetaError):
    """A user-supplied callable failed or produced non-finite values."""


class ConvergenceError(HyperzetaError):
    """Series acceleration could not certify the requested tolerance."""


class QuadratureError(HyperzetaError):
    """Adaptive quadrature refinement failed to converge."""


class TruncationError(HyperzetaError):
    """Grid window too small: the state has not decayed at the edges."""


class StepError(HyperzetaError):
    """Trajectory integration aborted (state blow-up guard tripped)."""


class SchemaError(HyperzetaError):
    """A data file does not carry the column schema a figure expects."""
