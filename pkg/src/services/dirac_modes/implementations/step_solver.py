import logging
import math

from src.services.dirac_modes.classification import (
    classify_case,
    interior_momentum,
    interior_spinor_ratio,
    matching_ratio,
    outer_momentum,
    outer_spinor_ratio,
)
from src.services.dirac_modes.exceptions import WrongCase
from src.services.dirac_modes.interfaces import ModeSolverInterface
from src.services.dirac_modes.schemas import (
    PhysicalParams,
    PlaneWaveMode,
    ScatteringCase,
    ScatteringSolution,
)
from src.services.dirac_modes.time_reversal import time_reverse_mode

logger = logging.getLogger(__name__)


class StepSolver(ModeSolverInterface):
    """
    Potential step V(x) = V for x > 0.

    Region I carries the incident and reflected waves, region II the
    transmitted wave; in the Klein regime region II uses the time-reversed
    mode and the matching is done against it.
    """

    def solve(
        self, params: PhysicalParams, incident: complex = 1.0
    ) -> ScatteringSolution:
        if params.width > 0.0:
            raise WrongCase("step geometry", "barrier geometry")

        label = classify_case(params)
        p = outer_momentum(params)
        k = interior_momentum(params)
        kappa = matching_ratio(params, p.value, k.value)

        reflected = incident * (1.0 - kappa) / (1.0 + kappa)
        transmitted = incident * 2.0 / (1.0 + kappa)

        return ScatteringSolution(
            params=params,
            label=label,
            kappa=kappa,
            p=p,
            k=k,
            incident=incident,
            reflected=reflected,
            transmitted=transmitted,
            time_reversed=label.case is ScatteringCase.CASE3,
        )

    def region_modes(
        self, solution: ScatteringSolution
    ) -> list[tuple[float, float, list[PlaneWaveMode]]]:
        params = solution.params
        p = solution.p.value.real
        c_p = outer_spinor_ratio(params)

        region_one = [
            PlaneWaveMode(
                amplitude=solution.incident, lower=c_p, wavenumber=p
            ),
            PlaneWaveMode(
                amplitude=solution.reflected, lower=-c_p, wavenumber=-p
            ),
        ]

        assert solution.k is not None
        transmitted = PlaneWaveMode(
            amplitude=solution.transmitted,
            lower=interior_spinor_ratio(params, solution.k.value),
            wavenumber=solution.k.value,
        )
        if solution.time_reversed:
            transmitted = time_reverse_mode(transmitted)

        return [
            (-math.inf, 0.0, region_one),
            (0.0, math.inf, [transmitted]),
        ]


def step_solution(
    params: PhysicalParams, incident: complex = 1.0
) -> ScatteringSolution:
    return StepSolver().solve(params, incident)
