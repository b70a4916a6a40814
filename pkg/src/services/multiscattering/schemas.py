from __future__ import annotations

import math

from pydantic import BaseModel, ConfigDict, Field, model_validator

from src.services.multiscattering.exceptions import InvalidSplit


class ScatteringSeries(BaseModel):
    """
    Internal-reflection series of a Klein barrier.

    Term n of the reflected series is (1 - |D|^2) q^n and of the
    transmitted series |D|^2 (1 - |B|^2) q^n, with q = |D|^2 |B|^2 < 1.
    """

    model_config = ConfigDict(frozen=True)

    q: float = Field(ge=0.0, lt=1.0)
    d_sq: float = Field(ge=0.0, le=1.0)
    b_sq: float = Field(ge=0.0, le=1.0)

    @model_validator(mode="after")
    def _check_split(self) -> ScatteringSeries:
        if not math.isclose(
            self.d_sq * self.b_sq, self.q, rel_tol=1e-12, abs_tol=1e-300
        ):
            raise InvalidSplit(self.q, self.d_sq, self.b_sq)
        return self

    @classmethod
    def matched(cls, q: float, transmission: float) -> ScatteringSeries:
        """
        Split q so the summed series reproduces the barrier's |T|^2.

        Solving |D|^2 (1 - |B|^2) / (1 - q) = |T|^2 with |D|^2 |B|^2 = q
        gives |D|^2 = q + |T|^2 (1 - q).
        """
        d_sq = min(q + transmission * (1.0 - q), 1.0)
        return cls(q=q, d_sq=d_sq, b_sq=q / d_sq if d_sq else 0.0)

    def reflection_term(self, n: int) -> float:
        return (1.0 - self.d_sq) * self.q**n

    def transmission_term(self, n: int) -> float:
        return self.d_sq * (1.0 - self.b_sq) * self.q**n

    @property
    def total_reflection(self) -> float:
        return (1.0 - self.d_sq) / (1.0 - self.q)

    @property
    def total_transmission(self) -> float:
        return self.d_sq * (1.0 - self.b_sq) / (1.0 - self.q)

    def partial_sum(self, n: int) -> float:
        """Sum of R(k) + T(k) for k = 0..n."""
        return math.fsum(
            self.reflection_term(k) + self.transmission_term(k)
            for k in range(n + 1)
        )

    def tail(self, n: int) -> float:
        """Probability not yet accounted for after terms 0..n."""
        return self.q ** (n + 1)
