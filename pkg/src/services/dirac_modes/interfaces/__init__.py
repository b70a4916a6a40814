from .mode_solver_interface import ModeSolverInterface

__all__ = ["ModeSolverInterface"]
