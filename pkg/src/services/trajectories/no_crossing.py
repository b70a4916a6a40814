from __future__ import annotations

import itertools
import logging
from collections import defaultdict
from typing import Dict, List, NamedTuple, Sequence

import numpy as np

from src.core.types import RealArray
from src.services.trajectories.schemas import (
    CrossingReport,
    CrossingViolation,
    SeedDirection,
    Trajectory,
)

logger = logging.getLogger(__name__)

CROSSING_TOLERANCE = 1e-6


class _Segment(NamedTuple):
    kind: str
    t: RealArray
    x: RealArray


def monotone_segments(trajectory: Trajectory) -> List[_Segment]:
    """
    Split a path at its turning times into pieces with monotone t.

    Each piece is returned with ascending t; ``kind`` records whether
    the path ran forward or backward in lab time along it.
    """
    t, x = trajectory.t, trajectory.x
    if t.size < 2:
        return []

    steps = np.sign(np.diff(t))
    breaks = np.flatnonzero(steps[1:] != steps[:-1]) + 1
    bounds = [0, *breaks.tolist(), steps.size]

    segments = []
    for start, stop in itertools.pairwise(bounds):
        piece_t = t[start : stop + 1]
        piece_x = x[start : stop + 1]
        if steps[start] > 0:
            segments.append(_Segment("forward", piece_t, piece_x))
        else:
            segments.append(
                _Segment("backward", piece_t[::-1], piece_x[::-1])
            )
    return segments


def _first_violation(
    first: _Segment,
    second: _Segment,
    samples: int,
    tolerance: float,
) -> tuple[float, float, float] | None:
    lower = max(first.t[0], second.t[0])
    upper = min(first.t[-1], second.t[-1])
    if upper <= lower:
        return None

    grid = np.linspace(lower, upper, samples)
    x_first = np.interp(grid, first.t, first.x)
    x_second = np.interp(grid, second.t, second.x)
    gap = x_first - x_second

    signs = np.sign(np.where(np.abs(gap) <= tolerance, 0.0, gap))
    nonzero = np.flatnonzero(signs)
    if nonzero.size == 0:
        return None
    flipped = nonzero[signs[nonzero] != signs[nonzero[0]]]
    if flipped.size == 0:
        return None
    i = flipped[0]
    return float(grid[i]), float(x_first[i]), float(x_second[i])


def check_no_crossing(
    trajectories: Sequence[Trajectory],
    samples: int = 256,
    tolerance: float = CROSSING_TOLERANCE,
) -> CrossingReport:
    """
    Verify that same-direction paths keep their x-ordering.

    Paths are grouped by seed direction and compared piecewise over
    every shared time interval of equally oriented segments. Paths may
    converge to within ``tolerance`` without counting as a crossing.
    """
    groups: Dict[SeedDirection, List[Trajectory]] = defaultdict(list)
    for trajectory in trajectories:
        groups[trajectory.seed.direction].append(trajectory)

    report = CrossingReport()
    for members in groups.values():
        pieces = [(path, monotone_segments(path)) for path in members]
        for (a, a_segments), (b, b_segments) in itertools.combinations(
            pieces, 2
        ):
            report.checked_pairs += 1
            for seg_a, seg_b in itertools.product(a_segments, b_segments):
                if seg_a.kind != seg_b.kind:
                    continue
                hit = _first_violation(seg_a, seg_b, samples, tolerance)
                if hit is None:
                    continue
                report.violations += 1
                if report.first_violation is None:
                    report.first_violation = CrossingViolation(
                        first=a.seed.index,
                        second=b.seed.index,
                        segment=seg_a.kind,
                        t=hit[0],
                        x_first=hit[1],
                        x_second=hit[2],
                    )
                break

    if report.ok:
        logger.info(
            f"No crossings among {report.checked_pairs} trajectory pairs"
        )
    else:
        logger.warning(
            f"{report.violations} crossing pair(s); first: "
            f"{report.first_violation}"
        )
    return report
