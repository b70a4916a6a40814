from __future__ import annotations

from enum import Enum
from typing import List

from pydantic import BaseModel, ConfigDict, Field


class LedgerIdentity(str, Enum):
    """Conservation identity checked for a scenario, as lhs = rhs."""

    STEP3 = "step3"
    BARRIER = "barrier"
    PLAIN = "plain"

    @property
    def equation(self) -> str:
        return {
            LedgerIdentity.STEP3: "P_A + P_T = P_R",
            LedgerIdentity.BARRIER: "P_R + P_T + P_B = P_A",
            LedgerIdentity.PLAIN: "P_R + P_T = P_A",
        }[self]


class GridMeta(BaseModel):
    model_config = ConfigDict(frozen=True)

    box_half_width: float
    spacing: float
    nodes: int
    time_slices: int
    final_time: float
    quadrature_order: int


class BoxEdgeDensity(BaseModel):
    """Largest J0 at x = +-box on the ledger slices, relative to the peak."""

    model_config = ConfigDict(frozen=True)

    left: float
    right: float

    @property
    def worst(self) -> float:
        return max(self.left, self.right)


class ProbabilityLedger(BaseModel):
    """
    Unnormalized slice probabilities and the residual of the identity.

    Serialized with the P_A / P_R / P_T / P_B keys of the ledger files.
    """

    model_config = ConfigDict(frozen=True, populate_by_name=True)

    scenario: str
    p_a: float = Field(ge=0.0, alias="P_A")
    p_r: float = Field(ge=0.0, alias="P_R")
    p_t: float = Field(ge=0.0, alias="P_T")
    p_b: float = Field(default=0.0, ge=0.0, alias="P_B")
    identity: LedgerIdentity
    residual: float = Field(ge=0.0)
    box_edge: BoxEdgeDensity
    grid_meta: GridMeta

    @property
    def sides(self) -> tuple[float, float]:
        if self.identity is LedgerIdentity.STEP3:
            return self.p_a + self.p_t, self.p_r
        if self.identity is LedgerIdentity.BARRIER:
            return self.p_r + self.p_t + self.p_b, self.p_a
        return self.p_r + self.p_t, self.p_a


class LeakStudyRow(BaseModel):
    model_config = ConfigDict(frozen=True)

    distance: float
    box_half_width: float
    p_a: float
    p_b: float

    @property
    def leak_fraction(self) -> float:
        return self.p_b / self.p_a if self.p_a > 0.0 else 0.0


class LeakStudy(BaseModel):
    model_config = ConfigDict(frozen=True)

    scenario: str
    rows: List[LeakStudyRow]

    @property
    def strictly_decreasing(self) -> bool:
        fractions = [row.leak_fraction for row in self.rows]
        return all(b < a for a, b in zip(fractions, fractions[1:]))
