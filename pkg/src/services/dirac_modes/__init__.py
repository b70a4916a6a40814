from src.services.dirac_modes.classification import (
    classify_case,
    kappa_squared_klein,
)
from src.services.dirac_modes.factory import ModeSolverFactory
from src.services.dirac_modes.implementations import (
    barrier_probabilities,
    barrier_solution,
    step_solution,
)
from src.services.dirac_modes.pair_production import (
    pair_production_count,
    pair_production_limit,
)
from src.services.dirac_modes.schemas import (
    CaseLabel,
    PhysicalParams,
    PlaneWaveMode,
    ScatteringCase,
    ScatteringSolution,
)
from src.services.dirac_modes.time_reversal import time_reverse_mode

__all__ = [
    "CaseLabel",
    "ModeSolverFactory",
    "PhysicalParams",
    "PlaneWaveMode",
    "ScatteringCase",
    "ScatteringSolution",
    "barrier_probabilities",
    "barrier_solution",
    "classify_case",
    "kappa_squared_klein",
    "pair_production_count",
    "pair_production_limit",
    "step_solution",
    "time_reverse_mode",
]
