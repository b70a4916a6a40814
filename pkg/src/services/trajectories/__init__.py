from src.services.trajectories.analysis import (
    Outcome,
    band_structure,
    bifurcation_point,
    emergence_times,
    oscillation_period,
    outcome,
    positions_at,
)
from src.services.trajectories.integrator import (
    TrajectoryIntegrator,
    integrate,
    integrate_ensemble,
)
from src.services.trajectories.no_crossing import check_no_crossing
from src.services.trajectories.sampling import sample_ensemble
from src.services.trajectories.schemas import (
    CrossingReport,
    Seed,
    SeedDirection,
    SeedLabel,
    TerminationReason,
    Trajectory,
)

__all__ = [
    "CrossingReport",
    "Outcome",
    "Seed",
    "SeedDirection",
    "SeedLabel",
    "TerminationReason",
    "Trajectory",
    "TrajectoryIntegrator",
    "band_structure",
    "bifurcation_point",
    "check_no_crossing",
    "emergence_times",
    "integrate",
    "integrate_ensemble",
    "oscillation_period",
    "outcome",
    "positions_at",
    "sample_ensemble",
]
