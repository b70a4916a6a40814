import logging
from typing import Dict, Type

from src.core.types import Geometry
from src.services.dirac_modes.exceptions import WrongCase
from src.services.dirac_modes.implementations import (
    BarrierSolver,
    StepSolver,
)
from src.services.dirac_modes.interfaces import ModeSolverInterface

logger = logging.getLogger(__name__)


class ModeSolverFactory:
    """
    Registry of closed-form solvers keyed by potential geometry.

    Usage:
        factory = ModeSolverFactory()
        solver = factory.get_solver("barrier")
        solution = solver.solve(params)
    """

    def __init__(self) -> None:
        self._solvers: Dict[str, Type[ModeSolverInterface]] = {}
        self._register_default_solvers()

    def _register_default_solvers(self) -> None:
        self.register_solver("step", StepSolver)
        self.register_solver("barrier", BarrierSolver)

    def register_solver(
        self, geometry: str, solver_class: Type[ModeSolverInterface]
    ) -> None:
        self._solvers[geometry.lower()] = solver_class

    def get_solver(self, geometry: Geometry | str) -> ModeSolverInterface:
        solver_class = self._solvers.get(geometry.lower())
        if not solver_class:
            logger.warning(f"Unsupported geometry: {geometry}")
            raise WrongCase("step or barrier geometry", str(geometry))

        return solver_class()
