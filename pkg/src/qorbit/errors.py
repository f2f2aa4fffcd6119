"""Exception hierarchy for numerical failures."""


class QorbitError(Exception):
    """Base class for all package-specific failures."""


class ConvergenceError(QorbitError):
    """An iterative solver failed to reach its tolerance."""


class ContourError(QorbitError):
    """An integration contour is invalid (e.g. crosses a branch cut)."""


class QuadratureError(QorbitError):
    """Adaptive quadrature failed to converge along a contour segment."""


class TrackingError(QorbitError):
    """Continuous root tracking lost a root between parameter steps."""
