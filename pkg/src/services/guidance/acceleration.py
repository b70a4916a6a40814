from __future__ import annotations

from typing import TYPE_CHECKING

import numpy as np

from src.core.config import settings
from src.services.guidance.current import time_direction
from src.services.guidance.exceptions import NodePoint, ReversedRegionError
from src.services.guidance.schemas import AccelerationTerms
from src.services.wavepacket.field_evaluator import field_evaluator

if TYPE_CHECKING:
    from src.scenarios.schemas import Scenario


def acceleration_decomposition(
    scenario: Scenario, x: float, t: float
) -> AccelerationTerms:
    """
    Split dv/dt along a trajectory into transport and spin terms.

    With rho = psi^+ psi, j = psi^+ sigma_x psi and Y = psi^+ sigma_y psi,
    the Dirac equation gives
        a_L = -2 Re[psi^+ (sigma_x - v)^2 d_x psi] / rho
        a_S = -2 m Y / rho
    Spatial derivatives come from the mode sum in closed form.
    """
    if time_direction(scenario, x) < 0:
        raise ReversedRegionError(x)

    evaluator = field_evaluator(scenario)
    upper, lower = evaluator.evaluate([x], t)
    d_upper, d_lower = evaluator.evaluate([x], t, derivative="x")
    upper, lower = complex(upper[0]), complex(lower[0])
    d_upper, d_lower = complex(d_upper[0]), complex(d_lower[0])

    density = abs(upper) ** 2 + abs(lower) ** 2
    if density < settings.NODE_EPSILON:
        raise NodePoint(density, settings.NODE_EPSILON)

    velocity = 2.0 * (upper.conjugate() * lower).real / density
    spin_density = 2.0 * (upper.conjugate() * lower).imag

    d_density = 2.0 * (
        upper.conjugate() * d_upper + lower.conjugate() * d_lower
    ).real
    d_current = 2.0 * (
        upper.conjugate() * d_lower + lower.conjugate() * d_upper
    ).real

    transport = (
        -(1.0 + velocity**2) * d_density + 2.0 * velocity * d_current
    ) / density
    spin = -2.0 * scenario.mass * spin_density / density

    return AccelerationTerms(
        transport=float(np.real(transport)), spin=float(spin)
    )
