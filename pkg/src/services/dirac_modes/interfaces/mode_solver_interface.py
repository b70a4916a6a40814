from abc import ABC, abstractmethod

from src.services.dirac_modes.schemas import (
    PhysicalParams,
    PlaneWaveMode,
    ScatteringSolution,
)


class ModeSolverInterface(ABC):
    """Contract for closed-form stationary solutions of one geometry."""

    @abstractmethod
    def solve(
        self, params: PhysicalParams, incident: complex = 1.0
    ) -> ScatteringSolution:
        pass

    @abstractmethod
    def region_modes(
        self, solution: ScatteringSolution
    ) -> list[tuple[float, float, list[PlaneWaveMode]]]:
        """Plane waves of each region as (x_lo, x_hi, modes)."""
        pass
