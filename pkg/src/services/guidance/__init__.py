from src.services.guidance.acceleration import acceleration_decomposition
from src.services.guidance.current import (
    current,
    current_arrays,
    time_direction,
    velocity_field,
)
from src.services.guidance.schemas import AccelerationTerms, CurrentSample

__all__ = [
    "AccelerationTerms",
    "CurrentSample",
    "acceleration_decomposition",
    "current",
    "current_arrays",
    "time_direction",
    "velocity_field",
]
