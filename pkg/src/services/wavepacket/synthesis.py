from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from typing import TYPE_CHECKING, Optional

import numpy as np
from scipy.integrate import simpson

from src.core.config import settings
from src.core.types import RealArray
from src.services.wavepacket.exceptions import QuadratureUnderResolved
from src.services.wavepacket.field_evaluator import (
    FieldEvaluator,
    field_evaluator,
)
from src.services.wavepacket.schemas import FieldGrid
from src.utils.performance_monitoring import timer_of_execution

if TYPE_CHECKING:
    from src.scenarios.schemas import Scenario

logger = logging.getLogger(__name__)


def spatial_nodes(scenario: Scenario) -> RealArray:
    count = int(round(2.0 * scenario.box / scenario.spacing)) + 1
    return np.linspace(-scenario.box, scenario.box, count)


def time_nodes(scenario: Scenario) -> RealArray:
    return np.linspace(0.0, scenario.tau_final, scenario.time_slices)


def total_probability(
    evaluator: FieldEvaluator, x: RealArray, t: float
) -> float:
    phi_plus, phi_minus = evaluator.evaluate(x, t)
    density = np.abs(phi_plus) ** 2 + np.abs(phi_minus) ** 2
    return float(simpson(density, x=x))


def check_quadrature(
    scenario: Scenario, tolerance: Optional[float] = None
) -> float:
    """
    Relative change of the t = 0 norm when the quadrature order doubles.

    Raises QuadratureUnderResolved when it exceeds the tolerance.
    """
    tolerance = tolerance or settings.QUADRATURE_TOLERANCE
    x = spatial_nodes(scenario)

    coarse = total_probability(field_evaluator(scenario), x, 0.0)
    refined_scenario = scenario.model_copy(
        update={"quadrature_order": 2 * scenario.quadrature_order}
    )
    fine = total_probability(FieldEvaluator(refined_scenario), x, 0.0)

    relative_change = abs(fine - coarse) / max(abs(fine), 1e-300)
    logger.debug(
        f"Quadrature check N={scenario.quadrature_order}: "
        f"relative change {relative_change:.3e}"
    )
    if relative_change > tolerance:
        raise QuadratureUnderResolved(
            scenario.quadrature_order, relative_change, tolerance
        )
    return relative_change


@timer_of_execution
def synthesize_field(
    scenario: Scenario,
    verify_quadrature: bool = True,
    times: Optional[RealArray] = None,
) -> FieldGrid:
    """Sample Psi, J0 and J1 on the scenario's spacetime lattice."""
    if verify_quadrature:
        check_quadrature(scenario)

    evaluator = field_evaluator(scenario)
    x = spatial_nodes(scenario)
    t = time_nodes(scenario) if times is None else np.asarray(times)

    with ThreadPoolExecutor(max_workers=settings.THREADS) as pool:
        slices = list(pool.map(lambda ti: evaluator.evaluate(x, ti), t))

    phi_plus = np.stack([upper for upper, _ in slices])
    phi_minus = np.stack([lower for _, lower in slices])
    density = np.abs(phi_plus) ** 2 + np.abs(phi_minus) ** 2
    current = 2.0 * np.real(np.conj(phi_plus) * phi_minus)

    logger.info(
        f"Synthesized '{scenario.name}': {t.size} slices x {x.size} nodes"
    )
    return FieldGrid(
        x=x,
        t=t,
        phi_plus=phi_plus,
        phi_minus=phi_minus,
        density=density,
        current=current,
    )
