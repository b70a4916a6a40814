from src.core.exceptions import CoreException


class WavepacketError(CoreException):
    """Base exception for packet synthesis."""

    pass


class InvalidEnergyDomain(WavepacketError):
    def __init__(self, lower: float, upper: float, reason: str):
        self.lower = lower
        self.upper = upper
        super().__init__(
            f"Energy domain ({lower}, {upper}) is invalid: {reason}"
        )


class QuadratureUnderResolved(WavepacketError):
    """Raised when doubling the quadrature order moves the norm too far."""

    def __init__(self, order: int, relative_change: float, tolerance: float):
        self.order = order
        self.relative_change = relative_change
        self.tolerance = tolerance
        super().__init__(
            f"Quadrature order {order} under-resolved: doubling changes "
            f"total probability by {relative_change:.3e} "
            f"(tolerance {tolerance:.1e})"
        )
