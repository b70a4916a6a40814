from __future__ import annotations

import logging
from typing import TYPE_CHECKING, List, Optional

import numpy as np
from scipy.integrate import cumulative_simpson

from src.core.types import RealArray, SamplingMode
from src.services.dirac_modes.implementations import step_solution
from src.services.dirac_modes.schemas import ScatteringCase
from src.services.trajectories.exceptions import EmptySlice
from src.services.trajectories.schemas import (
    Seed,
    SeedDirection,
    SeedLabel,
)
from src.services.wavepacket.field_evaluator import field_evaluator
from src.services.wavepacket.synthesis import spatial_nodes

if TYPE_CHECKING:
    from src.scenarios.schemas import Scenario

logger = logging.getLogger(__name__)

EMPTY_SLICE_MASS = 1e-12


def spacetime_weights(scenario: Scenario) -> tuple[float, float]:
    """
    Probabilities of starting in packet A (t = 0) or packet T (t = tau_F).

    |A|^2 / |R|^2 and -kappa |T|^2 / |R|^2 at the mean energy; (1, 0) for
    every scenario other than the Klein step.
    """
    if not is_klein_step(scenario):
        return 1.0, 0.0

    solution = step_solution(scenario.mean_params)
    reflected = abs(solution.reflected) ** 2
    return (
        abs(solution.incident) ** 2 / reflected,
        -solution.kappa.real * abs(solution.transmitted) ** 2 / reflected,
    )


def is_klein_step(scenario: Scenario) -> bool:
    return (
        scenario.geometry == "step"
        and scenario.case is ScatteringCase.CASE3
    )


def incident_window(scenario: Scenario) -> tuple[float, float]:
    if scenario.is_free:
        return -scenario.box, scenario.box
    return -scenario.box, 0.0


def slice_density(
    scenario: Scenario, t: float, window: tuple[float, float]
) -> tuple[RealArray, RealArray]:
    x = spatial_nodes(scenario)
    x = x[(x >= window[0]) & (x < window[1])]
    upper, lower = field_evaluator(scenario).evaluate(x, t)
    return x, np.abs(upper) ** 2 + np.abs(lower) ** 2


def _draw_positions(
    scenario: Scenario,
    t: float,
    window: tuple[float, float],
    count: int,
    mode: SamplingMode,
    rng: np.random.Generator,
    packet: Optional[tuple[float, float]] = None,
) -> RealArray:
    """
    Positions on one time slice.

    Gaussian draws use the packet's (centre, lambda) when given and the
    slice density's own mean and spread otherwise.
    """
    x, density = slice_density(scenario, t, window)
    cumulative = cumulative_simpson(density, x=x, initial=0.0)
    mass = float(cumulative[-1]) if x.size > 1 else 0.0
    if mass < EMPTY_SLICE_MASS:
        raise EmptySlice(t, window, mass)

    if mode == "born":
        cdf = np.maximum.accumulate(np.clip(cumulative / mass, 0.0, 1.0))
        positions = np.interp(rng.random(count), cdf, x)
    elif packet is not None:
        positions = rng.normal(*packet, size=count)
    else:
        weights = density / density.sum()
        centre = float(np.sum(weights * x))
        spread = float(np.sqrt(np.sum(weights * (x - centre) ** 2)))
        positions = rng.normal(centre, spread, size=count)

    return np.clip(positions, x[0], x[-1])


def sample_ensemble(
    scenario: Scenario,
    n: int,
    rng_seed: int,
    mode: Optional[SamplingMode] = None,
) -> List[Seed]:
    """
    Initial spacetime points on the t = 0 slice and, for the Klein step,
    the t = tau_F region-II slice split by the spacetime weights.
    """
    if n < 1:
        raise ValueError("ensemble size must be at least 1")
    mode = mode or scenario.sampling_mode

    split_seq, incident_seq, pair_seq = np.random.SeedSequence(
        rng_seed
    ).spawn(3)

    _, pair_weight = spacetime_weights(scenario)
    pair_count = (
        int(np.random.default_rng(split_seq).binomial(n, pair_weight))
        if pair_weight > 0.0
        else 0
    )
    incident_count = n - pair_count

    seeds: List[Seed] = []
    if incident_count:
        positions = _draw_positions(
            scenario,
            0.0,
            incident_window(scenario),
            incident_count,
            mode,
            np.random.default_rng(incident_seq),
            packet=(scenario.x0, scenario.wave_spread),
        )
        seeds.extend(
            Seed(x0=float(x0), t0=0.0) for x0 in np.sort(positions)
        )

    if pair_count:
        tau = scenario.tau_final
        positions = _draw_positions(
            scenario,
            tau,
            (0.0, scenario.box),
            pair_count,
            mode,
            np.random.default_rng(pair_seq),
        )
        seeds.extend(
            Seed(
                x0=float(x0),
                t0=tau,
                direction=SeedDirection.BACKWARD,
                label=SeedLabel.PAIR_BRANCH,
            )
            for x0 in np.sort(positions)
        )

    logger.info(
        f"Sampled {incident_count} incident and {pair_count} pair-branch "
        f"seeds ({mode}) for '{scenario.name}'"
    )
    return [
        seed.model_copy(update={"index": index})
        for index, seed in enumerate(seeds)
    ]
