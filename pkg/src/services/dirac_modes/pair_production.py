import math

from src.services.dirac_modes.exceptions import WrongCase
from src.services.dirac_modes.schemas import (
    ScatteringCase,
    ScatteringSolution,
)


def pair_production_count(solution: ScatteringSolution) -> float:
    """
    Mean number of pairs created at a Klein step.

    Equals (-kappa |T|^2 / |R|^2) |R|^2 = -4 kappa / (1 - kappa)^2 |R|^2.
    """
    if (
        solution.label.geometry != "step"
        or solution.label.case is not ScatteringCase.CASE3
    ):
        raise WrongCase(
            "step case3",
            f"{solution.label.geometry} {solution.label.case.value}",
        )

    kappa = solution.kappa.real
    return -4 * kappa / (1 - kappa) ** 2 * abs(solution.reflected) ** 2


def pair_production_limit(mass: float, energy: float) -> float:
    """V -> infinity limit of the pair count for |A| = 1."""
    momentum = math.sqrt(energy**2 - mass**2)
    kappa = -(energy + mass) / momentum
    return -4 * kappa / (1 + kappa) ** 2
