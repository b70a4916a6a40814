from __future__ import annotations

import logging
import math
from concurrent.futures import ThreadPoolExecutor
from typing import TYPE_CHECKING, List, Optional, Sequence

import numpy as np

from src.core.config import settings
from src.core.constants import (
    DT_MAX,
    DT_MIN,
    INTERFACE_STEP,
    MAX_VELOCITY_JUMP,
    RELATIVE_DENSITY_FLOOR,
)
from src.services.guidance.current import time_direction
from src.services.guidance.exceptions import NodePoint
from src.services.trajectories.exceptions import NodeStall
from src.services.trajectories.schemas import (
    Seed,
    TerminationReason,
    Trajectory,
)
from src.services.wavepacket.field_evaluator import field_evaluator
from src.services.wavepacket.synthesis import spatial_nodes

if TYPE_CHECKING:
    from src.scenarios.schemas import Scenario

logger = logging.getLogger(__name__)


class _LowDensity(Exception):
    pass


class TrajectoryIntegrator:
    """
    Fixed-stage RK4 integration of the guidance law with step halving.

    The state (t, x) advances by a step h of lab time:
        dt = sigma * s(x) * h,  dx = sigma * (J1 / J0) * h
    where s(x) is the region's time direction and sigma the orientation
    fixed at seeding. Inside ordinary regions this is dx/dt = J1/J0; a
    crossing into a time-reversed region flips the lab-time direction.

    Attributes:
        scenario: experiment providing the field
        base_step: nominal lab-time step
        density_floor: steps touching lower densities are halved
        raise_on_stall: raise NodeStall instead of freezing the path
    """

    def __init__(
        self,
        scenario: Scenario,
        base_step: Optional[float] = None,
        density_floor: Optional[float] = None,
        raise_on_stall: bool = False,
    ):
        self.scenario = scenario
        self.evaluator = field_evaluator(scenario)
        self.base_step = base_step or default_step(scenario)
        self.density_floor = (
            density_floor
            if density_floor is not None
            else RELATIVE_DENSITY_FLOOR * reference_density(scenario)
        )
        self.raise_on_stall = raise_on_stall
        self.t_bounds = (0.0, scenario.tau_final)

    def _flow(self, t: float, x: float, sigma: int) -> tuple[float, float]:
        upper, lower = self.evaluator.evaluate_point(x, t)
        density = abs(upper) ** 2 + abs(lower) ** 2
        if density < self.density_floor:
            raise _LowDensity
        flux = 2.0 * (upper.conjugate() * lower).real
        heading = sigma * time_direction(self.scenario, x)
        return heading, sigma * flux / density

    def _rk4(
        self, t: float, x: float, h: float, sigma: int
    ) -> tuple[float, float]:
        k1 = self._flow(t, x, sigma)
        k2 = self._flow(t + 0.5 * h * k1[0], x + 0.5 * h * k1[1], sigma)
        k3 = self._flow(t + 0.5 * h * k2[0], x + 0.5 * h * k2[1], sigma)
        k4 = self._flow(t + h * k3[0], x + h * k3[1], sigma)
        return (
            t + h * (k1[0] + 2 * k2[0] + 2 * k3[0] + k4[0]) / 6,
            x + h * (k1[1] + 2 * k2[1] + 2 * k3[1] + k4[1]) / 6,
        )

    def _sample(self, t: float, x: float) -> tuple[float, float]:
        upper, lower = self.evaluator.evaluate_point(x, t)
        density = abs(upper) ** 2 + abs(lower) ** 2
        flux = 2.0 * (upper.conjugate() * lower).real
        velocity = time_direction(self.scenario, x) * flux / density
        return density, velocity

    def _remaining_time(self, t: float, heading: int) -> float:
        t_min, t_max = self.t_bounds
        return t_max - t if heading > 0 else t - t_min

    def integrate(self, seed: Seed) -> Trajectory:
        t, x = seed.t0, seed.x0
        density, velocity = self._sample(t, x)
        if density <= settings.NODE_EPSILON:
            raise NodePoint(density, settings.NODE_EPSILON)

        sigma = seed.direction.sign * time_direction(self.scenario, x)
        box = self.scenario.box

        times, positions = [t], [x]
        densities, velocities = [density], [velocity]
        turning_times: List[float] = []
        termination = TerminationReason.REACHED_TIME_BOUND

        while True:
            heading = sigma * time_direction(self.scenario, x)
            remaining = self._remaining_time(t, heading)
            if remaining <= 1e-12:
                break

            h = min(self.base_step, remaining)
            while True:
                try:
                    t_new, x_new = self._rk4(t, x, h, sigma)
                    density_new, velocity_new = self._sample(t_new, x_new)
                    accepted = self._accept(
                        x, x_new, velocity, velocity_new, density_new, h
                    )
                except _LowDensity:
                    accepted = False

                if accepted:
                    break
                h *= 0.5
                if h < DT_MIN:
                    if self.raise_on_stall:
                        raise NodeStall(t, x, h)
                    logger.warning(
                        f"Trajectory {seed.index} stalled at "
                        f"(t={t:.4f}, x={x:.4f})"
                    )
                    termination = TerminationReason.NODE_STALL
                    break

            if termination is TerminationReason.NODE_STALL:
                break

            if time_direction(self.scenario, x_new) != time_direction(
                self.scenario, x
            ):
                turning_times.append(t_new)

            t, x = t_new, x_new
            velocity = velocity_new
            times.append(t)
            positions.append(x)
            densities.append(density_new)
            velocities.append(velocity_new)

            if abs(x) >= box:
                termination = TerminationReason.LEFT_BOX
                break

        return Trajectory(
            seed=seed,
            t=np.asarray(times),
            x=np.asarray(positions),
            density=np.asarray(densities),
            velocity=np.asarray(velocities),
            termination=termination,
            turning_times=turning_times,
        )

    def _accept(
        self,
        x: float,
        x_new: float,
        velocity: float,
        velocity_new: float,
        density_new: float,
        h: float,
    ) -> bool:
        if not math.isfinite(x_new) or density_new < self.density_floor:
            return False
        crosses = time_direction(self.scenario, x_new) != time_direction(
            self.scenario, x
        )
        if crosses:
            return h <= INTERFACE_STEP
        return abs(velocity_new - velocity) <= MAX_VELOCITY_JUMP


def default_step(scenario: Scenario) -> float:
    """dt = min(0.1, lambda / (200 v_mean))."""
    if scenario.mean_velocity == 0.0:
        return DT_MAX
    return min(
        DT_MAX, scenario.wave_spread / (200.0 * scenario.mean_velocity)
    )


def reference_density(scenario: Scenario) -> float:
    """Peak density of the t = 0 slice."""
    upper, lower = field_evaluator(scenario).evaluate(
        spatial_nodes(scenario), 0.0
    )
    return float(np.max(np.abs(upper) ** 2 + np.abs(lower) ** 2))


def integrate(seed: Seed, scenario: Scenario) -> Trajectory:
    return TrajectoryIntegrator(scenario).integrate(seed)


def integrate_ensemble(
    seeds: Sequence[Seed],
    scenario: Scenario,
    base_step: Optional[float] = None,
) -> List[Trajectory]:
    """Integrate independent seeds in parallel; output keeps seed order."""
    integrator = TrajectoryIntegrator(scenario, base_step=base_step)
    with ThreadPoolExecutor(max_workers=settings.THREADS) as pool:
        trajectories = list(pool.map(integrator.integrate, seeds))

    logger.info(
        f"Integrated {len(trajectories)} trajectories for "
        f"'{scenario.name}'"
    )
    return trajectories
