from __future__ import annotations

from enum import Enum
from typing import TYPE_CHECKING, List, Optional, Sequence

import numpy as np

from src.services.trajectories.no_crossing import monotone_segments
from src.services.trajectories.schemas import SeedLabel, Trajectory

if TYPE_CHECKING:
    from src.scenarios.schemas import Scenario


class Outcome(str, Enum):
    REFLECTED = "reflected"
    TRANSMITTED = "transmitted"
    TRAPPED = "trapped"


def outcome(trajectory: Trajectory, scenario: Scenario) -> Outcome:
    """Classify a path by the region it ends in."""
    final = trajectory.final_position
    if final < scenario.interfaces[0]:
        return Outcome.REFLECTED
    if final >= scenario.interfaces[-1]:
        return Outcome.TRANSMITTED
    return Outcome.TRAPPED


def bifurcation_point(
    trajectories: Sequence[Trajectory], scenario: Scenario
) -> Optional[float]:
    """
    Seed position separating the reflected prefix from the transmitted
    suffix of an x0-sorted incident ensemble.

    Returns None when the outcomes are not split into two contiguous
    blocks, or when every seed shares one outcome.
    """
    incident = sorted(
        (
            path
            for path in trajectories
            if path.seed.label is SeedLabel.INCIDENT
        ),
        key=lambda path: path.seed.x0,
    )
    outcomes = [outcome(path, scenario) for path in incident]
    if Outcome.TRAPPED in outcomes:
        return None

    switches = [
        i
        for i in range(1, len(outcomes))
        if outcomes[i] is not outcomes[i - 1]
    ]
    if len(switches) != 1:
        return None
    i = switches[0]
    if outcomes[i] is not Outcome.TRANSMITTED:
        return None
    return 0.5 * (incident[i - 1].seed.x0 + incident[i].seed.x0)


def band_structure(positions: Sequence[float], gap: float) -> List[tuple]:
    """
    Group positions into bands separated by more than ``gap``.

    Returns (lower, upper, count) for each band in ascending order.
    """
    ordered = np.sort(np.asarray(positions, dtype=float))
    if ordered.size == 0:
        return []
    cuts = np.flatnonzero(np.diff(ordered) > gap) + 1
    return [
        (float(band[0]), float(band[-1]), int(band.size))
        for band in np.split(ordered, cuts)
    ]


def positions_at(
    trajectories: Sequence[Trajectory], t: float
) -> List[float]:
    """
    Positions of every path branch present at lab time ``t``.

    A path that turns in time contributes one position per branch that
    spans ``t``.
    """
    positions = []
    for path in trajectories:
        for segment in monotone_segments(path):
            if segment.t[0] <= t <= segment.t[-1]:
                positions.append(float(np.interp(t, segment.t, segment.x)))
    return positions


def oscillation_period(trajectory: Trajectory) -> Optional[float]:
    """
    Mean period of velocity sign changes, two zero crossings per cycle.
    """
    moving = trajectory.velocity != 0.0
    v, t = trajectory.velocity[moving], trajectory.t[moving]
    changes = np.flatnonzero(v[1:] * v[:-1] < 0.0)
    if changes.size < 2:
        return None

    # linear interpolation of each zero between samples
    left, right = changes, changes + 1
    zeros = t[left] - v[left] * (t[right] - t[left]) / (v[right] - v[left])
    return float(2.0 * np.mean(np.diff(zeros)))


def emergence_times(
    trajectories: Sequence[Trajectory], scenario: Scenario
) -> List[float]:
    """
    Earliest lab time each path is found beyond the last interface.
    """
    edge = scenario.interfaces[-1]
    times = []
    for path in trajectories:
        beyond = path.x >= edge
        if beyond.any():
            times.append(float(path.t[beyond].min()))
    return times
