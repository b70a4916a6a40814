from __future__ import annotations

import logging
import math
from typing import TYPE_CHECKING

import numpy as np
from scipy.special import roots_legendre

from src.core.types import RealArray
from src.services.dirac_modes.schemas import ScatteringCase
from src.services.wavepacket.exceptions import InvalidEnergyDomain
from src.services.wavepacket.schemas import EnergyDomain

if TYPE_CHECKING:
    from src.scenarios.schemas import Scenario

logger = logging.getLogger(__name__)


def case_band(
    case: ScatteringCase, mass: float, potential: float
) -> tuple[float, float]:
    """Energy band of a case: D1, D2, D3, or (m, inf) for the free packet."""
    if case is ScatteringCase.CASE1:
        return potential + mass, potential + 2 * mass
    if case is ScatteringCase.CASE2:
        return potential - mass, potential + mass
    if case is ScatteringCase.CASE3:
        return mass, potential - mass
    return mass, math.inf


def energy_domain(scenario: Scenario) -> EnergyDomain:
    """
    Band of the scenario's case intersected with the support of G(p).

    The support is p in [K0 - w/lambda, K0 + w/lambda] for w window
    widths; the free packet integrates over that momentum interval
    directly.
    """
    half_window = scenario.window_sigmas / scenario.wave_spread
    p_lower = scenario.k0 - half_window
    p_upper = scenario.k0 + half_window

    if scenario.is_free:
        return EnergyDomain(
            lower=p_lower,
            upper=p_upper,
            order=scenario.quadrature_order,
            variable="momentum",
        )

    m = scenario.mass
    band_lower, band_upper = case_band(
        scenario.case, m, scenario.potential
    )
    window_lower = math.hypot(max(p_lower, 0.0), m)
    window_upper = math.hypot(p_upper, m)

    lower = max(band_lower, window_lower)
    upper = min(band_upper, window_upper)
    if not upper > lower:
        raise InvalidEnergyDomain(
            lower, upper, "packet support misses the case band"
        )

    logger.debug(
        f"Energy domain ({lower:.6f}, {upper:.6f}) inside band "
        f"({band_lower:.6f}, {band_upper:.6f})"
    )
    return EnergyDomain(
        lower=lower, upper=upper, order=scenario.quadrature_order
    )


def gauss_legendre(domain: EnergyDomain) -> tuple[RealArray, RealArray]:
    """Nodes and weights of the Gauss-Legendre rule mapped to the domain."""
    nodes, weights = roots_legendre(domain.order)
    half = 0.5 * (domain.upper - domain.lower)
    centre = 0.5 * (domain.upper + domain.lower)
    return (
        np.asarray(centre + half * nodes, dtype=np.float64),
        np.asarray(half * weights, dtype=np.float64),
    )
