from src.services.wavepacket.field_evaluator import (
    FieldEvaluator,
    evaluate_field,
    field_evaluator,
)
from src.services.wavepacket.gaussian import gaussian_weight
from src.services.wavepacket.schemas import (
    EnergyDomain,
    FieldGrid,
    PacketParams,
    Spinor2,
)
from src.services.wavepacket.synthesis import (
    check_quadrature,
    synthesize_field,
)

__all__ = [
    "EnergyDomain",
    "FieldEvaluator",
    "FieldGrid",
    "PacketParams",
    "Spinor2",
    "check_quadrature",
    "evaluate_field",
    "field_evaluator",
    "gaussian_weight",
    "synthesize_field",
]
