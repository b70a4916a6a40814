from __future__ import annotations

from typing import TYPE_CHECKING, Optional

import numpy as np

from src.core.config import settings
from src.core.types import ComplexArray, RealArray
from src.services.dirac_modes.schemas import ScatteringCase
from src.services.guidance.exceptions import NodePoint
from src.services.guidance.schemas import CurrentSample
from src.services.wavepacket.field_evaluator import field_evaluator
from src.services.wavepacket.schemas import Spinor2

if TYPE_CHECKING:
    from src.scenarios.schemas import Scenario


def current_arrays(
    phi_plus: ComplexArray, phi_minus: ComplexArray
) -> tuple[RealArray, RealArray]:
    density = np.abs(phi_plus) ** 2 + np.abs(phi_minus) ** 2
    flux = 2.0 * np.real(np.conj(phi_plus) * phi_minus)
    return density, flux


def current(
    psi: Spinor2, direction: int = 1, epsilon: Optional[float] = None
) -> CurrentSample:
    """J0, J1 and the lab velocity of a single spinor value."""
    epsilon = settings.NODE_EPSILON if epsilon is None else epsilon
    density, flux = current_arrays(
        np.array([psi.phi_plus]), np.array([psi.phi_minus])
    )
    rho, j = float(density[0]), float(flux[0])

    if rho < epsilon:
        raise NodePoint(rho, epsilon)

    return CurrentSample(
        density=rho,
        current=j,
        velocity=direction * j / rho,
        direction=direction,
    )


def time_direction(scenario: Scenario, x):
    """-1 inside a Klein-regime potential region, +1 elsewhere."""
    x = np.asarray(x, dtype=np.float64)
    direction = np.ones(x.shape, dtype=np.int64)

    if scenario.case is ScatteringCase.CASE3:
        upper = scenario.width if scenario.geometry == "barrier" else np.inf
        direction[(x >= 0.0) & (x < upper)] = -1

    return int(direction) if direction.ndim == 0 else direction


def velocity_field(
    scenario: Scenario, x, t: float
) -> tuple[RealArray, RealArray, RealArray]:
    """Density, raw current and lab velocity at points x and time t."""
    x = np.atleast_1d(np.asarray(x, dtype=np.float64))
    density, flux = current_arrays(*field_evaluator(scenario).evaluate(x, t))
    with np.errstate(divide="ignore", invalid="ignore"):
        velocity = time_direction(scenario, x) * flux / density
    return density, flux, velocity
