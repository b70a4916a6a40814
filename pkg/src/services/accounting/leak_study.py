from __future__ import annotations

import logging
from typing import TYPE_CHECKING, Sequence

from src.services.accounting.ledger import slice_probability
from src.services.accounting.schemas import LeakStudy, LeakStudyRow
from src.services.dirac_modes.exceptions import WrongCase
from src.services.wavepacket.synthesis import synthesize_field

if TYPE_CHECKING:
    from src.scenarios.schemas import Scenario

logger = logging.getLogger(__name__)


def barrier_leak_study(
    scenario: Scenario, distances: Sequence[float]
) -> LeakStudy:
    """
    P_B / P_A at t = 0 as the packet starts further from the barrier.

    The box grows in proportion to the distance so the packet keeps the
    same margin to the edges.
    """
    if scenario.geometry != "barrier":
        raise WrongCase("barrier geometry", f"{scenario.geometry} geometry")

    rows = []
    for distance in distances:
        box = scenario.box * distance / abs(scenario.x0)
        moved = scenario.model_copy(
            update={"x0": -distance, "box_half_width": box}
        )
        field = synthesize_field(moved, verify_quadrature=False, times=[0.0])
        rows.append(
            LeakStudyRow(
                distance=distance,
                box_half_width=box,
                p_a=slice_probability(field, 0.0, -box, 0.0),
                p_b=slice_probability(field, 0.0, 0.0, moved.width),
            )
        )
        logger.debug(
            f"Leak study d={distance}: P_B/P_A={rows[-1].leak_fraction:.3e}"
        )

    study = LeakStudy(scenario=scenario.name, rows=rows)
    if not study.strictly_decreasing:
        logger.warning(
            f"P_B/P_A does not decrease with distance for '{scenario.name}'"
        )
    return study
