from src.core.exceptions import CoreException


class GuidanceError(CoreException):
    """Base exception for the velocity field."""

    pass


class NodePoint(GuidanceError):
    """Raised when the density vanishes and the velocity is undefined."""

    def __init__(self, density: float, epsilon: float):
        self.density = density
        self.epsilon = epsilon
        super().__init__(
            f"Density {density:.3e} below node threshold {epsilon:.1e}"
        )


class ReversedRegionError(GuidanceError):
    """Raised when a Dirac-equation identity is used in a reversed region."""

    def __init__(self, x: float):
        self.x = x
        super().__init__(
            f"x={x} lies in a time-reversed region where the field does "
            f"not obey the forward Dirac equation"
        )
