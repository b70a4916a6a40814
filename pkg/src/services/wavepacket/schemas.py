from __future__ import annotations

from pydantic import BaseModel, ConfigDict, Field, model_validator

from src.core.types import ComplexArray, RealArray


class PacketParams(BaseModel):
    """Gaussian packet: mean momentum K0, mean position X0, spread lambda."""

    model_config = ConfigDict(frozen=True)

    k0: float
    x0: float
    spread: float = Field(gt=0.0)


class EnergyDomain(BaseModel):
    """Open integration interval inside a case band plus quadrature order.

    For the free packet the bounds are momenta instead of energies.
    """

    model_config = ConfigDict(frozen=True)

    lower: float
    upper: float
    order: int = Field(ge=2)
    variable: str = "energy"

    @model_validator(mode="after")
    def _check_interval(self) -> EnergyDomain:
        if not self.upper > self.lower:
            raise ValueError(
                f"empty integration interval ({self.lower}, {self.upper})"
            )
        return self


class Spinor2(BaseModel):
    model_config = ConfigDict(frozen=True)

    phi_plus: complex
    phi_minus: complex


class FieldGrid(BaseModel):
    """
    Field sampled on a uniform spacetime lattice.

    Arrays are indexed [t, x]. ``density`` is J0 = Psi^dagger Psi and
    ``current`` the raw Dirac current J1 = Psi^dagger sigma_x Psi.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    x: RealArray
    t: RealArray
    phi_plus: ComplexArray
    phi_minus: ComplexArray
    density: RealArray
    current: RealArray

    @property
    def spacing(self) -> float:
        return float(self.x[1] - self.x[0])

    def slice_index(self, t: float) -> int:
        return int(abs(self.t - t).argmin())
