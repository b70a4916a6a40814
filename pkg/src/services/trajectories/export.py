import csv
import json
import logging
from pathlib import Path
from typing import Sequence

from src.services.trajectories.schemas import Trajectory
from src.services.wavepacket.export import format_float

logger = logging.getLogger(__name__)

TRAJECTORY_HEADER = ("trajectory_id", "t", "x", "density", "velocity")


def write_trajectories_csv(
    trajectories: Sequence[Trajectory], path: Path
) -> Path:
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", newline="") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(TRAJECTORY_HEADER)
        for trajectory in trajectories:
            index = str(trajectory.seed.index)
            for row in zip(
                trajectory.t,
                trajectory.x,
                trajectory.density,
                trajectory.velocity,
            ):
                writer.writerow([index, *map(format_float, row)])

    logger.info(f"{len(trajectories)} trajectories written to {path}")
    return path


def ensemble_manifest(trajectories: Sequence[Trajectory]) -> list[dict]:
    return [
        {
            "trajectory_id": path.seed.index,
            "x0": path.seed.x0,
            "t0": path.seed.t0,
            "direction": path.seed.direction.value,
            "label": path.seed.label.value,
            "termination": path.termination.value,
            "turning_times": path.turning_times,
            "samples": int(path.t.size),
            "min_density": path.min_density,
            "max_speed": path.max_speed,
        }
        for path in trajectories
    ]


def write_ensemble_manifest(
    trajectories: Sequence[Trajectory], path: Path
) -> Path:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(
        json.dumps({"trajectories": ensemble_manifest(trajectories)}, indent=2)
    )
    return path
