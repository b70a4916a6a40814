from .barrier_solver import (
    BarrierSolver,
    barrier_probabilities,
    barrier_solution,
)
from .step_solver import StepSolver, step_solution

__all__ = [
    "BarrierSolver",
    "StepSolver",
    "barrier_probabilities",
    "barrier_solution",
    "step_solution",
]
