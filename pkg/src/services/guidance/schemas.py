from pydantic import BaseModel, ConfigDict, Field


class CurrentSample(BaseModel):
    """
    Dirac current at one point.

    Attributes:
        density: J0 = |phi_+|^2 + |phi_-|^2
        current: J1 = 2 Re(phi_+^* phi_-)
        velocity: lab-frame dx/dt = direction * J1 / J0
        direction: sign of dt/ds, -1 in negative-energy regions
    """

    model_config = ConfigDict(frozen=True)

    density: float = Field(ge=0.0)
    current: float
    velocity: float
    direction: int = 1


class AccelerationTerms(BaseModel):
    model_config = ConfigDict(frozen=True)

    transport: float
    spin: float

    @property
    def total(self) -> float:
        return self.transport + self.spin
