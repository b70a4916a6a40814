import cmath
import logging
import math

from src.core.constants import EVANESCENT_OVERFLOW_LIMIT
from src.services.dirac_modes.classification import (
    classify_case,
    interior_momentum,
    interior_spinor_ratio,
    matching_ratio,
    outer_momentum,
    outer_spinor_ratio,
)
from src.services.dirac_modes.exceptions import BarrierOverflow, WrongCase
from src.services.dirac_modes.interfaces import ModeSolverInterface
from src.services.dirac_modes.schemas import (
    BarrierProbabilities,
    CaseLabel,
    Momentum,
    MomentumBranch,
    PhysicalParams,
    PlaneWaveMode,
    ScatteringCase,
    ScatteringSolution,
)

logger = logging.getLogger(__name__)


class BarrierSolver(ModeSolverInterface):
    """
    Rectangular barrier V(x) = V for 0 < x < L.

    Interior waves are B (1, c) exp(i s k x) + D (1, -c) exp(-i s k x) with
    s = -1 in the Klein regime (time-reversed interior) and s = +1
    otherwise. Continuity at x = 0 and x = L fixes R, B, D, T.

    Attributes:
        raise_on_overflow: raise BarrierOverflow instead of returning the
                           total-reflection limit for opaque evanescent
                           barriers
    """

    def __init__(self, raise_on_overflow: bool = False) -> None:
        self.raise_on_overflow = raise_on_overflow

    def solve(
        self, params: PhysicalParams, incident: complex = 1.0
    ) -> ScatteringSolution:
        if params.width <= 0.0:
            raise WrongCase("barrier geometry", "step geometry")

        label = classify_case(params)
        p = outer_momentum(params)
        k = interior_momentum(params)
        kappa = matching_ratio(params, p.value, k.value)
        time_reversed = label.case is ScatteringCase.CASE3
        width = params.width

        decay_exponent = abs(k.value.imag) * width
        if (
            k.branch is MomentumBranch.EVANESCENT
            and decay_exponent > EVANESCENT_OVERFLOW_LIMIT
        ):
            if self.raise_on_overflow:
                raise BarrierOverflow(decay_exponent)
            return self._opaque_limit(params, incident, kappa, label, p, k)

        sign = -1 if time_reversed else 1
        theta = -sign * k.value * width
        grow, shrink = cmath.exp(1j * theta), cmath.exp(-1j * theta)

        denominator = grow * (1 + kappa) ** 2 - shrink * (1 - kappa) ** 2
        reflected = incident * (1 - kappa**2) * (grow - shrink) / denominator
        transmitted = (
            incident
            * 4
            * kappa
            * cmath.exp(-1j * p.value * width)
            / denominator
        )

        forward, backward = self._interior_from_left_edge(
            incident, reflected, kappa
        )

        return ScatteringSolution(
            params=params,
            label=label,
            kappa=kappa,
            p=p,
            k=k,
            incident=incident,
            reflected=reflected,
            transmitted=transmitted,
            interior_forward=forward,
            interior_backward=backward,
            time_reversed=time_reversed,
        )

    @staticmethod
    def _interior_from_left_edge(
        incident: complex, reflected: complex, kappa: complex
    ) -> tuple[complex, complex]:
        # B + D = A + R and B - D = (A - R) / kappa
        total = incident + reflected
        difference = (incident - reflected) / kappa
        return (total + difference) / 2, (total - difference) / 2

    def _opaque_limit(
        self,
        params: PhysicalParams,
        incident: complex,
        kappa: complex,
        label: CaseLabel,
        p: Momentum,
        k: Momentum,
    ) -> ScatteringSolution:
        logger.warning(
            f"Barrier interior overflows (Im(k)L > "
            f"{EVANESCENT_OVERFLOW_LIMIT}); using total reflection limit"
        )
        reflected = incident * (1 - kappa) / (1 + kappa)
        return ScatteringSolution(
            params=params,
            label=label,
            kappa=kappa,
            p=p,
            k=k,
            incident=incident,
            reflected=reflected,
            transmitted=0.0j,
            interior_forward=incident * 2 / (1 + kappa),
            interior_backward=0.0j,
            time_reversed=False,
            overflow=True,
        )

    def region_modes(
        self, solution: ScatteringSolution
    ) -> list[tuple[float, float, list[PlaneWaveMode]]]:
        params = solution.params
        p = solution.p.value.real
        c_p = outer_spinor_ratio(params)

        assert solution.k is not None
        k = solution.k.value
        c_k = interior_spinor_ratio(params, k)
        sign = solution.interior_phase_sign

        interior = [
            PlaneWaveMode(
                amplitude=solution.interior_forward or 0.0j,
                lower=c_k,
                wavenumber=sign * k,
            ),
            PlaneWaveMode(
                amplitude=solution.interior_backward or 0.0j,
                lower=-c_k,
                wavenumber=-sign * k,
            ),
        ]

        return [
            (
                -math.inf,
                0.0,
                [
                    PlaneWaveMode(
                        amplitude=solution.incident,
                        lower=c_p,
                        wavenumber=p,
                    ),
                    PlaneWaveMode(
                        amplitude=solution.reflected,
                        lower=-c_p,
                        wavenumber=-p,
                    ),
                ],
            ),
            (0.0, params.width, interior),
            (
                params.width,
                math.inf,
                [
                    PlaneWaveMode(
                        amplitude=solution.transmitted,
                        lower=c_p,
                        wavenumber=p,
                    )
                ],
            ),
        ]


def barrier_solution(
    params: PhysicalParams, incident: complex = 1.0
) -> ScatteringSolution:
    return BarrierSolver().solve(params, incident)


def barrier_probabilities(
    solution: ScatteringSolution,
) -> BarrierProbabilities:
    """Trigonometric |R|^2/|A|^2 and |T|^2/|A|^2 for propagating interiors."""
    if solution.k is None or solution.k.branch is MomentumBranch.EVANESCENT:
        raise WrongCase("propagating barrier interior", "evanescent")

    kappa = solution.kappa.real
    phase = solution.k.value.real * solution.params.width
    denominator = (
        (1 + kappa) ** 4
        + (1 - kappa) ** 4
        - 2 * math.cos(2 * phase) * (1 - kappa**2) ** 2
    )

    return BarrierProbabilities(
        reflection=4
        * math.sin(phase) ** 2
        * (1 - kappa**2) ** 2
        / denominator,
        transmission=16 * kappa**2 / denominator,
    )
