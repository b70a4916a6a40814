from src.core.exceptions import CoreException


class RunError(CoreException):
    """Base exception for scenario runs."""

    pass


class InvariantFailure(RunError):
    """Raised when a run finishes but a checked property does not hold."""

    def __init__(self, check: str, detail: str):
        self.check = check
        self.detail = detail
        super().__init__(f"Check '{check}' failed: {detail}")
