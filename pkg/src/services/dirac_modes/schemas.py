from __future__ import annotations

import cmath
from enum import Enum
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

from src.core.types import Geometry


class ScatteringCase(str, Enum):
    """Energy partition of the incident wave relative to the potential.

    FREE: V = 0
    CASE1: V + m < E, propagating interior
    CASE2: V - m < E < V + m, evanescent interior
    CASE3: m < E < V - m, Klein regime with a negative-energy interior
    """

    FREE = "free"
    CASE1 = "case1"
    CASE2 = "case2"
    CASE3 = "case3"


class MomentumBranch(str, Enum):
    PROPAGATING = "propagating"
    EVANESCENT = "evanescent"


class PhysicalParams(BaseModel):
    """Parameters of one stationary scattering problem (hbar = c = 1).

    Attributes:
        mass: particle mass m > 0
        potential: step or barrier height V >= 0
        width: barrier width L, 0 for a step
        energy: incident energy E > m
    """

    model_config = ConfigDict(frozen=True)

    mass: float = Field(default=1.0, gt=0.0)
    potential: float = Field(ge=0.0)
    width: float = Field(default=0.0, ge=0.0)
    energy: float

    @model_validator(mode="after")
    def _check_propagating(self) -> PhysicalParams:
        if self.energy <= self.mass:
            raise ValueError(
                f"energy {self.energy} must exceed mass {self.mass}"
            )
        return self

    @property
    def geometry(self) -> Geometry:
        return "barrier" if self.width > 0.0 else "step"


class CaseLabel(BaseModel):
    model_config = ConfigDict(frozen=True)

    case: ScatteringCase
    geometry: Geometry


class Momentum(BaseModel):
    model_config = ConfigDict(frozen=True)

    value: complex
    branch: MomentumBranch

    @model_validator(mode="after")
    def _check_branch(self) -> Momentum:
        if self.branch is MomentumBranch.PROPAGATING:
            if self.value.imag != 0.0 or self.value.real <= 0.0:
                raise ValueError("propagating momentum must be real > 0")
        elif self.value.real != 0.0 or self.value.imag <= 0.0:
            raise ValueError(
                "evanescent momentum must be imaginary with Im > 0"
            )
        return self


class ScatteringSolution(BaseModel):
    """Mode coefficients for one energy.

    Region-II spatial phase is exp(+i k x) for B (step: T) and
    exp(-i k x) for D, unless ``time_reversed`` is set, in which case both
    phases are conjugated.
    """

    model_config = ConfigDict(frozen=True)

    params: PhysicalParams
    label: CaseLabel
    kappa: complex
    p: Momentum
    k: Optional[Momentum] = None
    incident: complex = 1.0 + 0.0j
    reflected: complex
    transmitted: complex
    interior_forward: Optional[complex] = None
    interior_backward: Optional[complex] = None
    time_reversed: bool = False
    overflow: bool = False

    @property
    def interior_phase_sign(self) -> int:
        return -1 if self.time_reversed else 1


class BarrierProbabilities(BaseModel):
    model_config = ConfigDict(frozen=True)

    reflection: float
    transmission: float


class PlaneWaveMode(BaseModel):
    """Single spinor plane wave ``amplitude * spinor * exp(i q x)``."""

    model_config = ConfigDict(frozen=True)

    amplitude: complex
    upper: complex = 1.0 + 0.0j
    lower: complex
    wavenumber: complex

    def evaluate(self, x: float) -> tuple[complex, complex]:
        phase = self.amplitude * cmath.exp(1j * self.wavenumber * x)
        return phase * self.upper, phase * self.lower
