from src.core.exceptions import CoreException


class AccountingError(CoreException):
    """Base exception for probability accounting."""

    pass


class SliceMissing(AccountingError):
    def __init__(self, t: float, nearest: float):
        self.t = t
        self.nearest = nearest
        super().__init__(
            f"Field has no slice at t={t}; nearest slice is t={nearest}"
        )


class LedgerResidualExceeded(AccountingError):
    """Raised when a conservation identity misses its tolerance."""

    def __init__(self, identity: str, residual: float, tolerance: float):
        self.identity = identity
        self.residual = residual
        self.tolerance = tolerance
        super().__init__(
            f"Identity '{identity}' residual {residual:.3e} exceeds "
            f"{tolerance:.1e}"
        )
