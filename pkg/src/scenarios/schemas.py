from __future__ import annotations

import math
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

from src.core.constants import (
    DEFAULT_ENSEMBLE_SIZE,
    DEFAULT_QUADRATURE_ORDER,
    DEFAULT_RNG_SEED,
    DEFAULT_TIME_SLICES,
    WINDOW_SIGMAS,
)
from src.core.types import FreeBranches, Geometry, SamplingMode
from src.services.dirac_modes.classification import classify_case
from src.services.dirac_modes.schemas import (
    CaseLabel,
    PhysicalParams,
    ScatteringCase,
)
from src.services.wavepacket.schemas import PacketParams


class Scenario(BaseModel):
    """
    Full description of one scattering experiment.

    Optional fields left as None are derived from the packet: the box
    half-width, grid spacing and final time follow the defaults for
    lambda = 100 packets (box 1500, spacing lambda / 50, final time long
    enough for the reflected packet to separate from the potential).
    """

    model_config = ConfigDict(frozen=True)

    name: str = "custom"
    geometry: Geometry = "step"
    mass: float = Field(default=1.0, gt=0.0)
    potential: float = Field(default=0.0, ge=0.0)
    width: float = Field(default=0.0, ge=0.0)

    k0: float
    x0: float
    wave_spread: float = Field(gt=0.0)

    quadrature_order: int = Field(default=DEFAULT_QUADRATURE_ORDER, ge=2)
    window_sigmas: float = Field(default=WINDOW_SIGMAS, gt=0.0)
    free_branches: FreeBranches = "positive"

    box_half_width: Optional[float] = Field(default=None, gt=0.0)
    grid_spacing: Optional[float] = Field(default=None, gt=0.0)
    time_slices: int = Field(default=DEFAULT_TIME_SLICES, ge=2)
    final_time: Optional[float] = Field(default=None, gt=0.0)

    ensemble_size: int = Field(default=DEFAULT_ENSEMBLE_SIZE, ge=1)
    sampling_mode: SamplingMode = "gaussian"
    rng_seed: int = DEFAULT_RNG_SEED

    @model_validator(mode="after")
    def _check_consistency(self) -> Scenario:
        if self.geometry == "barrier" and self.width <= 0.0:
            raise ValueError("barrier scenarios need a width > 0")
        if self.geometry == "step" and self.width != 0.0:
            raise ValueError("step scenarios must have width 0")
        if self.potential > 0.0:
            if self.mean_energy <= self.mass:
                raise ValueError("scattering scenarios need K0 > 0")
            classify_case(self.mean_params)
        if self.final_time is None and self.mean_velocity == 0.0:
            raise ValueError("a packet at rest needs an explicit final_time")
        return self

    @property
    def packet(self) -> PacketParams:
        return PacketParams(k0=self.k0, x0=self.x0, spread=self.wave_spread)

    @property
    def mean_energy(self) -> float:
        return math.hypot(self.k0, self.mass)

    @property
    def mean_velocity(self) -> float:
        return abs(self.k0) / self.mean_energy

    @property
    def mean_params(self) -> PhysicalParams:
        return PhysicalParams(
            mass=self.mass,
            potential=self.potential,
            width=self.width,
            energy=self.mean_energy,
        )

    @property
    def label(self) -> CaseLabel:
        if self.potential == 0.0:
            return CaseLabel(case=ScatteringCase.FREE, geometry=self.geometry)
        return classify_case(self.mean_params)

    @property
    def case(self) -> ScatteringCase:
        return self.label.case

    @property
    def is_free(self) -> bool:
        return self.potential == 0.0

    @property
    def interfaces(self) -> tuple[float, ...]:
        if self.geometry == "barrier":
            return (0.0, self.width)
        return (0.0,)

    @property
    def box(self) -> float:
        if self.box_half_width is not None:
            return self.box_half_width
        return 1500.0

    @property
    def spacing(self) -> float:
        if self.grid_spacing is not None:
            return self.grid_spacing
        return self.wave_spread / 50.0

    @property
    def tau_final(self) -> float:
        """Arrival at the potential, return trip and three packet widths."""
        if self.final_time is not None:
            return self.final_time
        travel = 2.0 * abs(self.x0) + 2.0 * self.width
        return (travel + 3.0 * self.wave_spread) / self.mean_velocity

    @property
    def arrival_time(self) -> float:
        if self.mean_velocity == 0.0:
            return 0.0
        return abs(self.x0) / self.mean_velocity
