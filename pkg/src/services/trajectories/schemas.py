from __future__ import annotations

from enum import Enum
from typing import List, Optional

from pydantic import BaseModel, ConfigDict, Field

from src.core.types import RealArray


class SeedDirection(str, Enum):
    FORWARD = "forward"
    BACKWARD = "backward"

    @property
    def sign(self) -> int:
        return 1 if self is SeedDirection.FORWARD else -1


class SeedLabel(str, Enum):
    INCIDENT = "incident"
    PAIR_BRANCH = "pair-branch"


class TerminationReason(str, Enum):
    REACHED_TIME_BOUND = "reached-time-bound"
    LEFT_BOX = "left-box"
    NODE_STALL = "node-stall"


class Seed(BaseModel):
    """Initial spacetime point of one trajectory."""

    model_config = ConfigDict(frozen=True)

    index: int = 0
    x0: float
    t0: float
    direction: SeedDirection = SeedDirection.FORWARD
    label: SeedLabel = SeedLabel.INCIDENT


class Trajectory(BaseModel):
    """
    Samples of one integrated path.

    ``t`` is strictly monotone between consecutive entries of
    ``turning_times``; the lab-time direction flips only where the path
    crosses into or out of a time-reversed region.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    seed: Seed
    t: RealArray
    x: RealArray
    density: RealArray
    velocity: RealArray
    termination: TerminationReason
    turning_times: List[float] = Field(default_factory=list)

    @property
    def min_density(self) -> float:
        return float(self.density.min())

    @property
    def max_speed(self) -> float:
        return float(abs(self.velocity).max())

    @property
    def final_position(self) -> float:
        return float(self.x[-1])


class CrossingViolation(BaseModel):
    model_config = ConfigDict(frozen=True)

    first: int
    second: int
    segment: str
    t: float
    x_first: float
    x_second: float


class CrossingReport(BaseModel):
    checked_pairs: int = 0
    violations: int = 0
    first_violation: Optional[CrossingViolation] = None

    @property
    def ok(self) -> bool:
        return self.violations == 0
