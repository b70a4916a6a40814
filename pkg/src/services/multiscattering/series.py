import logging
from typing import Optional

from src.services.dirac_modes.classification import kappa_squared_klein
from src.services.dirac_modes.exceptions import WrongCase
from src.services.dirac_modes.implementations import barrier_probabilities
from src.services.dirac_modes.schemas import (
    ScatteringCase,
    ScatteringSolution,
)
from src.services.multiscattering.exceptions import KappaBoundViolated
from src.services.multiscattering.schemas import ScatteringSeries

logger = logging.getLogger(__name__)


def _require_klein_barrier(solution: ScatteringSolution) -> None:
    if (
        solution.label.geometry != "barrier"
        or solution.label.case is not ScatteringCase.CASE3
    ):
        raise WrongCase(
            "barrier case3",
            f"{solution.label.geometry} {solution.label.case.value}",
        )


def contraction_factor(solution: ScatteringSolution) -> float:
    """q = |D|^2 |B|^2 = (|T|^2 / 4)^2 (1 - 1/kappa^2)^2."""
    _require_klein_barrier(solution)
    transmission = barrier_probabilities(solution).transmission
    kappa_sq = abs(solution.kappa) ** 2
    return (transmission / 4.0) ** 2 * (1.0 - 1.0 / kappa_sq) ** 2


def scattering_series(
    solution: ScatteringSolution, d_sq: Optional[float] = None
) -> ScatteringSeries:
    """
    Series for a Klein barrier solution.

    Without an explicit |D|^2 the split is matched to the barrier's
    transmission, so the summed T(n) equal |T|^2 and the summed R(n)
    equal |R|^2.
    """
    q = contraction_factor(solution)
    if d_sq is None:
        transmission = barrier_probabilities(solution).transmission
        return ScatteringSeries.matched(q, transmission)
    return ScatteringSeries(q=q, d_sq=d_sq, b_sq=q / d_sq if d_sq else 0.0)


def series_terms(solution: ScatteringSolution, n: int) -> tuple[float, float]:
    """(R(n), T(n)) of the internal-reflection series."""
    if n < 0:
        raise ValueError("series index must be non-negative")
    series = scattering_series(solution)
    return series.reflection_term(n), series.transmission_term(n)


def kappa_bound_check(mass: float, energy: float, potential: float) -> float:
    """kappa^2 in the Klein regime V > 2m, m < E < V - m; always >= 1."""
    if not (potential > 2 * mass and mass < energy < potential - mass):
        raise WrongCase(
            "Klein regime V > 2m, m < E < V - m",
            f"m={mass}, E={energy}, V={potential}",
        )
    kappa_sq = kappa_squared_klein(mass, energy, potential)
    if kappa_sq < 1.0:
        raise KappaBoundViolated(kappa_sq)
    return kappa_sq
