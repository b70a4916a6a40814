from src.core.exceptions import CoreException


class MultiScatteringError(CoreException):
    """Base exception for the internal-reflection series."""

    pass


class InvalidSplit(MultiScatteringError):
    def __init__(self, q: float, d_sq: float, b_sq: float):
        self.q = q
        self.d_sq = d_sq
        self.b_sq = b_sq
        super().__init__(
            f"|D|^2 = {d_sq} and |B|^2 = {b_sq} do not multiply to q = {q}"
        )


class KappaBoundViolated(MultiScatteringError):
    def __init__(self, kappa_sq: float):
        self.kappa_sq = kappa_sq
        super().__init__(f"kappa^2 = {kappa_sq} is below 1")
