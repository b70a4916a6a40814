from __future__ import annotations

import logging
from typing import TYPE_CHECKING

from pydantic import BaseModel, ConfigDict
from tabulate import tabulate

from src.services.dirac_modes.implementations import (
    barrier_probabilities,
    barrier_solution,
)
from src.services.multiscattering.series import (
    kappa_bound_check,
    scattering_series,
)

if TYPE_CHECKING:
    from src.scenarios.schemas import Scenario

logger = logging.getLogger(__name__)

SERIES_TERMS = 8


class AppendixCheck(BaseModel):
    model_config = ConfigDict(frozen=True)

    q: float
    kappa_sq: float
    kappa_sq_solution: float
    total_reflection: float
    total_transmission: float
    sum_residual: float
    tail_residual: float
    transmission_residual: float

    @property
    def ok(self) -> bool:
        return (
            self.q < 1.0
            and self.kappa_sq >= 1.0
            and self.sum_residual <= 1e-12
            and self.tail_residual <= 1e-12
            and self.transmission_residual <= 1e-12
            and abs(self.kappa_sq - self.kappa_sq_solution)
            <= 1e-12 * self.kappa_sq
        )


def appendix_check(
    scenario: Scenario, terms: int = SERIES_TERMS
) -> tuple[AppendixCheck, str]:
    """Series identities at the scenario's mean energy plus a term table."""
    params = scenario.mean_params
    solution = barrier_solution(params)
    series = scattering_series(solution)

    check = AppendixCheck(
        q=series.q,
        kappa_sq=kappa_bound_check(
            params.mass, params.energy, params.potential
        ),
        kappa_sq_solution=abs(solution.kappa) ** 2,
        total_reflection=series.total_reflection,
        total_transmission=series.total_transmission,
        sum_residual=abs(
            series.total_reflection + series.total_transmission - 1.0
        ),
        tail_residual=max(
            abs(1.0 - series.partial_sum(n) - series.tail(n))
            for n in range(terms)
        ),
        transmission_residual=abs(
            series.total_transmission
            - barrier_probabilities(solution).transmission
        ),
    )

    rows = [
        (
            n,
            series.reflection_term(n),
            series.transmission_term(n),
            series.partial_sum(n),
            series.tail(n),
        )
        for n in range(terms)
    ]
    table = tabulate(
        rows,
        headers=["n", "R(n)", "T(n)", "partial sum", "tail q^(n+1)"],
        floatfmt=".6e",
    )
    logger.info(
        f"Appendix check '{scenario.name}': q={check.q:.6e}, "
        f"kappa^2={check.kappa_sq:.6f}, ok={check.ok}"
    )
    return check, table
