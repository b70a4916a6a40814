from __future__ import annotations

import functools
import logging
import math
from typing import TYPE_CHECKING, List, Literal

import numpy as np
from pydantic import BaseModel, ConfigDict

from src.core.types import ComplexArray
from src.services.dirac_modes.factory import ModeSolverFactory
from src.services.dirac_modes.schemas import PhysicalParams
from src.services.wavepacket.gaussian import gaussian_weight
from src.services.wavepacket.quadrature import energy_domain, gauss_legendre
from src.services.wavepacket.schemas import Spinor2

if TYPE_CHECKING:
    from src.scenarios.schemas import Scenario

logger = logging.getLogger(__name__)

Derivative = Literal["none", "x", "t"]


class ComponentGroup(BaseModel):
    """
    Plane-wave components sharing a spatial region.

    Contributes sum_j a_j (u_j, l_j) exp(i q_j x - i w_j t) for
    x_lower <= x < x_upper.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    x_lower: float
    x_upper: float
    amplitude: ComplexArray
    upper: ComplexArray
    lower: ComplexArray
    wavenumber: ComplexArray
    frequency: ComplexArray


class FieldEvaluator:
    """
    Exact evaluation of the quadrature sum for Psi(x, t).

    Scattering packets sum stationary modes over the energy domain with
    weights w_j G(p(E_j)); free packets sum free modes over a momentum
    window, optionally projecting a rest spinor onto both energy signs.

    Attributes:
        scenario: experiment description
        groups: compiled plane-wave components per region
    """

    def __init__(self, scenario: Scenario, amplitude_scale: complex = 1.0):
        self.scenario = scenario
        self.amplitude_scale = amplitude_scale
        self.groups: List[ComponentGroup] = (
            self._build_free_groups()
            if scenario.is_free
            else self._build_scattering_groups()
        )

    def _build_scattering_groups(self) -> List[ComponentGroup]:
        scenario = self.scenario
        nodes, weights = gauss_legendre(energy_domain(scenario))
        solver = ModeSolverFactory().get_solver(scenario.geometry)

        momenta = np.sqrt(nodes**2 - scenario.mass**2)
        node_weights = (
            self.amplitude_scale
            * weights
            * gaussian_weight(momenta, scenario.packet)
        )

        collected: dict[tuple[int, int], list] = {}
        bounds: dict[int, tuple[float, float]] = {}
        for energy, node_weight in zip(nodes, node_weights):
            params = PhysicalParams(
                mass=scenario.mass,
                potential=scenario.potential,
                width=scenario.width,
                energy=float(energy),
            )
            regions = solver.region_modes(solver.solve(params))
            for region_index, (x_lo, x_hi, modes) in enumerate(regions):
                bounds[region_index] = (x_lo, x_hi)
                for mode_index, mode in enumerate(modes):
                    collected.setdefault(
                        (region_index, mode_index), []
                    ).append(
                        (
                            node_weight * mode.amplitude,
                            mode.upper,
                            mode.lower,
                            mode.wavenumber,
                            energy,
                        )
                    )

        groups = []
        for (region_index, _), rows in sorted(collected.items()):
            columns = np.array(rows, dtype=np.complex128).T
            x_lo, x_hi = bounds[region_index]
            groups.append(
                ComponentGroup(
                    x_lower=x_lo,
                    x_upper=x_hi,
                    amplitude=columns[0],
                    upper=columns[1],
                    lower=columns[2],
                    wavenumber=columns[3],
                    frequency=columns[4],
                )
            )

        logger.debug(
            f"Compiled {len(groups)} component groups from "
            f"{len(nodes)} energy nodes for '{scenario.name}'"
        )
        return groups

    def _build_free_groups(self) -> List[ComponentGroup]:
        scenario = self.scenario
        momenta, weights = gauss_legendre(energy_domain(scenario))
        energies = np.hypot(momenta, scenario.mass)
        ratio = momenta / (energies + scenario.mass)
        node_weights = (
            self.amplitude_scale
            * weights
            * gaussian_weight(momenta, scenario.packet)
        ).astype(np.complex128)
        ones = np.ones_like(node_weights)
        wavenumber = momenta.astype(np.complex128)

        if scenario.free_branches == "positive":
            return [
                ComponentGroup(
                    x_lower=-math.inf,
                    x_upper=math.inf,
                    amplitude=node_weights,
                    upper=ones,
                    lower=ratio.astype(np.complex128),
                    wavenumber=wavenumber,
                    frequency=energies.astype(np.complex128),
                )
            ]

        # Rest spinor (1, 0) = [(1, c) - c (-c, 1)] / (1 + c^2)
        norm = 1.0 + ratio**2
        return [
            ComponentGroup(
                x_lower=-math.inf,
                x_upper=math.inf,
                amplitude=node_weights / norm,
                upper=ones,
                lower=ratio.astype(np.complex128),
                wavenumber=wavenumber,
                frequency=energies.astype(np.complex128),
            ),
            ComponentGroup(
                x_lower=-math.inf,
                x_upper=math.inf,
                amplitude=-node_weights * ratio / norm,
                upper=(-ratio).astype(np.complex128),
                lower=ones,
                wavenumber=wavenumber,
                frequency=(-energies).astype(np.complex128),
            ),
        ]

    def evaluate(
        self, x, t: float, derivative: Derivative = "none"
    ) -> tuple[ComplexArray, ComplexArray]:
        """Spinor components (or their x- or t-derivative) at points x."""
        x = np.atleast_1d(np.asarray(x, dtype=np.float64))
        phi_plus = np.zeros(x.shape, dtype=np.complex128)
        phi_minus = np.zeros(x.shape, dtype=np.complex128)

        for group in self.groups:
            mask = (x >= group.x_lower) & (x < group.x_upper)
            if not mask.any():
                continue

            coefficients = group.amplitude * np.exp(
                -1j * group.frequency * t
            )
            if derivative == "x":
                coefficients = coefficients * 1j * group.wavenumber
            elif derivative == "t":
                coefficients = coefficients * -1j * group.frequency

            phases = np.exp(1j * np.outer(x[mask], group.wavenumber))
            phi_plus[mask] += phases @ (coefficients * group.upper)
            phi_minus[mask] += phases @ (coefficients * group.lower)

        return phi_plus, phi_minus

    def evaluate_point(
        self, x: float, t: float
    ) -> tuple[complex, complex]:
        """Scalar fast path of evaluate() for trajectory integration."""
        phi_plus = 0j
        phi_minus = 0j
        for group in self.groups:
            if not group.x_lower <= x < group.x_upper:
                continue
            terms = group.amplitude * np.exp(
                1j * (group.wavenumber * x - group.frequency * t)
            )
            phi_plus += complex(terms @ group.upper)
            phi_minus += complex(terms @ group.lower)
        return phi_plus, phi_minus

    def spinor(self, x: float, t: float) -> Spinor2:
        phi_plus, phi_minus = self.evaluate([x], t)
        return Spinor2(
            phi_plus=complex(phi_plus[0]), phi_minus=complex(phi_minus[0])
        )


@functools.lru_cache(maxsize=16)
def field_evaluator(scenario: Scenario) -> FieldEvaluator:
    return FieldEvaluator(scenario)


def evaluate_field(scenario: Scenario, x: float, t: float) -> Spinor2:
    """Psi at an arbitrary spacetime point, no interpolation."""
    return field_evaluator(scenario).spinor(x, t)
