from src.core.exceptions import CoreException


class DiracModesError(CoreException):
    """Base exception for stationary mode solutions."""

    pass


class DegenerateEnergy(DiracModesError):
    """Raised when E sits on a band edge E = V + m or E = V - m."""

    def __init__(self, energy: float, edge: float):
        self.energy = energy
        self.edge = edge
        super().__init__(
            f"Energy {energy!r} lies on the band edge {edge!r}"
        )


class KappaSingular(DiracModesError):
    """Raised when the matching ratio is -1 and R, T diverge."""

    def __init__(self, kappa: complex):
        self.kappa = kappa
        super().__init__(f"Matching ratio kappa={kappa!r} is singular")


class BarrierOverflow(DiracModesError):
    """Raised when an evanescent barrier interior overflows."""

    def __init__(self, decay_exponent: float):
        self.decay_exponent = decay_exponent
        super().__init__(
            f"Evanescent exponent Im(k)L={decay_exponent:.1f} overflows"
        )


class WrongCase(DiracModesError):
    """Raised when an operation is used outside its scattering case."""

    def __init__(self, expected: str, actual: str):
        self.expected = expected
        self.actual = actual
        super().__init__(f"Expected {expected}, got {actual}")
