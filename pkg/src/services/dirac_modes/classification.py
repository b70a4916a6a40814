import cmath
import logging
import math

from src.core.config import settings
from src.services.dirac_modes.exceptions import (
    DegenerateEnergy,
    KappaSingular,
)
from src.services.dirac_modes.schemas import (
    CaseLabel,
    Momentum,
    MomentumBranch,
    PhysicalParams,
    ScatteringCase,
)

logger = logging.getLogger(__name__)


def classify_case(params: PhysicalParams) -> CaseLabel:
    """Place the incident energy in the case partition of the potential.

    Band edges E = V + m and E = V - m are rejected with DegenerateEnergy.
    """
    m, v, e = params.mass, params.potential, params.energy

    if v == 0.0:
        return CaseLabel(case=ScatteringCase.FREE, geometry=params.geometry)

    for edge in (v + m, v - m):
        if abs(e - edge) < settings.BAND_EDGE_TOL:
            raise DegenerateEnergy(e, edge)

    if e > v + m:
        case = ScatteringCase.CASE1
    elif e > v - m:
        case = ScatteringCase.CASE2
    else:
        case = ScatteringCase.CASE3

    return CaseLabel(case=case, geometry=params.geometry)


def outer_momentum(params: PhysicalParams) -> Momentum:
    p = math.sqrt(params.energy**2 - params.mass**2)
    return Momentum(value=complex(p, 0.0), branch=MomentumBranch.PROPAGATING)


def interior_momentum(params: PhysicalParams) -> Momentum:
    """k = +sqrt((E-V)^2 - m^2), or i*sqrt(m^2 - (E-V)^2) when evanescent."""
    kinetic = params.energy - params.potential
    discriminant = kinetic**2 - params.mass**2

    if discriminant > 0.0:
        return Momentum(
            value=complex(math.sqrt(discriminant), 0.0),
            branch=MomentumBranch.PROPAGATING,
        )
    return Momentum(
        value=complex(0.0, math.sqrt(-discriminant)),
        branch=MomentumBranch.EVANESCENT,
    )


def matching_ratio(params: PhysicalParams, p: complex, k: complex) -> complex:
    """kappa = (k/p) (E+m)/(E-V+m)."""
    m, e = params.mass, params.energy
    kappa = (k / p) * (e + m) / (e - params.potential + m)

    if cmath.isclose(kappa, -1.0, abs_tol=settings.KAPPA_SINGULAR_TOL):
        raise KappaSingular(kappa)

    return complex(kappa)


def interior_spinor_ratio(params: PhysicalParams, k: complex) -> complex:
    """Lower/upper ratio k/(E-V+m) of the region-II forward spinor."""
    return k / (params.energy - params.potential + params.mass)


def outer_spinor_ratio(params: PhysicalParams) -> float:
    p = math.sqrt(params.energy**2 - params.mass**2)
    return p / (params.energy + params.mass)


def kappa_squared_klein(mass: float, energy: float, potential: float) -> float:
    """Closed form kappa^2 = (E+m)/(E-m) * (|E-V|+m)/(|E-V|-m)."""
    gap = abs(energy - potential)
    return (energy + mass) / (energy - mass) * (gap + mass) / (gap - mass)
