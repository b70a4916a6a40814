from __future__ import annotations

import logging
from typing import TYPE_CHECKING, Optional

import numpy as np
from scipy.integrate import cumulative_simpson

from src.core.config import settings
from src.services.accounting.exceptions import (
    LedgerResidualExceeded,
    SliceMissing,
)
from src.services.accounting.schemas import (
    BoxEdgeDensity,
    GridMeta,
    LedgerIdentity,
    ProbabilityLedger,
)
from src.services.dirac_modes.exceptions import WrongCase
from src.services.dirac_modes.schemas import (
    ScatteringCase,
    ScatteringSolution,
)
from src.services.wavepacket.schemas import FieldGrid

if TYPE_CHECKING:
    from src.scenarios.schemas import Scenario

logger = logging.getLogger(__name__)

SLICE_MATCH = 1e-9


def _slice(field: FieldGrid, t: float) -> int:
    index = field.slice_index(t)
    nearest = float(field.t[index])
    if abs(nearest - t) > SLICE_MATCH * max(1.0, abs(t)):
        raise SliceMissing(t, nearest)
    return index


def slice_probability(
    field: FieldGrid, t: float, a: float, b: float
) -> float:
    """
    Integral of J0 over [a, b] on the slice at time t.

    Composite Simpson running sums are interpolated at the bounds, so
    adjacent intervals add up exactly.
    """
    if b < a:
        raise ValueError(f"empty interval [{a}, {b}]")
    density = field.density[_slice(field, t)]
    running = cumulative_simpson(density, x=field.x, initial=0.0)
    lower, upper = np.interp([a, b], field.x, running)
    return float(upper - lower)


def ledger_identity(scenario: Scenario) -> LedgerIdentity:
    if scenario.case is ScatteringCase.CASE3:
        if scenario.geometry == "barrier":
            return LedgerIdentity.BARRIER
        return LedgerIdentity.STEP3
    return LedgerIdentity.PLAIN


def _box_edge(field: FieldGrid, slices: tuple[int, int]) -> BoxEdgeDensity:
    rows = field.density[list(slices)]
    peak = float(rows.max()) or 1.0
    return BoxEdgeDensity(
        left=float(rows[:, 0].max()) / peak,
        right=float(rows[:, -1].max()) / peak,
    )


def build_ledger(scenario: Scenario, field: FieldGrid) -> ProbabilityLedger:
    """
    Slice integrals at t = 0 and t = tau_F and the residual of the
    identity that applies to the scenario.

    Infinite limits are the box edges; the density left at the edges is
    reported with the ledger.
    """
    start, end = 0.0, scenario.tau_final
    box = scenario.box
    left, right = scenario.interfaces[0], scenario.interfaces[-1]

    if scenario.is_free:
        p_a = slice_probability(field, start, -box, box)
    else:
        p_a = slice_probability(field, start, -box, left)
    p_r = slice_probability(field, end, -box, left)
    p_t = slice_probability(field, end, right, box)
    p_b = (
        slice_probability(field, start, left, right)
        if scenario.geometry == "barrier"
        else 0.0
    )

    identity = ledger_identity(scenario)
    box_edge = _box_edge(field, (_slice(field, start), _slice(field, end)))
    ledger = ProbabilityLedger(
        scenario=scenario.name,
        p_a=p_a,
        p_r=p_r,
        p_t=p_t,
        p_b=p_b,
        identity=identity,
        residual=0.0,
        box_edge=box_edge,
        grid_meta=GridMeta(
            box_half_width=box,
            spacing=field.spacing,
            nodes=int(field.x.size),
            time_slices=int(field.t.size),
            final_time=end,
            quadrature_order=scenario.quadrature_order,
        ),
    )
    lhs, rhs = ledger.sides
    ledger = ledger.model_copy(
        update={"residual": abs(lhs - rhs) / max(lhs, rhs, 1e-300)}
    )

    if box_edge.worst > settings.LEDGER_TOLERANCE:
        logger.warning(
            f"Density at the box edge is {box_edge.worst:.2e} of the peak; "
            f"the ledger for '{scenario.name}' is truncated"
        )
    logger.info(
        f"Ledger '{scenario.name}' ({identity.equation}): "
        f"residual {ledger.residual:.3e}"
    )
    return ledger


def check_ledger(
    ledger: ProbabilityLedger, tolerance: Optional[float] = None
) -> ProbabilityLedger:
    tolerance = tolerance or settings.LEDGER_TOLERANCE
    if ledger.residual > tolerance:
        raise LedgerResidualExceeded(
            ledger.identity.value, ledger.residual, tolerance
        )
    return ledger


def spacetime_partition(solution: ScatteringSolution) -> float:
    """
    |A|^2/|R|^2 + (-kappa |T|^2)/|R|^2 for the Klein step; equals one.
    """
    if (
        solution.label.case is not ScatteringCase.CASE3
        or solution.label.geometry != "step"
    ):
        raise WrongCase(
            "step case3",
            f"{solution.label.geometry} {solution.label.case.value}",
        )
    reflected = abs(solution.reflected) ** 2
    incident = abs(solution.incident) ** 2
    pair = -solution.kappa.real * abs(solution.transmitted) ** 2
    return (incident + pair) / reflected
