from src.core.exceptions import CoreException


class TrajectoryError(CoreException):
    """Base exception for trajectory integration and sampling."""

    pass


class NodeStall(TrajectoryError):
    """Raised when the adaptive step underflows near a node."""

    def __init__(self, t: float, x: float, step: float):
        self.t = t
        self.x = x
        self.step = step
        super().__init__(
            f"Step {step:.1e} underflowed at (t={t:.6f}, x={x:.6f})"
        )


class EmptySlice(TrajectoryError):
    """Raised when a sampling slice carries no probability."""

    def __init__(self, t: float, window: tuple[float, float], mass: float):
        self.t = t
        self.window = window
        self.mass = mass
        super().__init__(
            f"Slice t={t} over {window} integrates to {mass:.3e}"
        )
