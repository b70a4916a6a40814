import numpy as np

from src.services.wavepacket.schemas import PacketParams


def gaussian_weight(p, packet: PacketParams):
    """G(p) = exp(-lambda^2 (p - K0)^2 / 2 - i p X0); accepts arrays."""
    p = np.asarray(p, dtype=np.float64)
    exponent = (
        -0.5 * packet.spread**2 * (p - packet.k0) ** 2 - 1j * p * packet.x0
    )
    weight = np.exp(exponent)
    return complex(weight) if weight.ndim == 0 else weight
