"""
Application settings and configuration.
"""

import os

from dotenv import load_dotenv

from src.core.constants import (
    BAND_EDGE_TOL,
    KAPPA_SINGULAR_TOL,
    LEDGER_TOLERANCE,
    NODE_EPSILON,
    OUTPUT_DIR,
    QUADRATURE_TOLERANCE,
)

load_dotenv()


def _threads_from_env() -> int:
    raw = os.getenv("KLEIN_PILOT_THREADS")
    if raw is None:
        return os.cpu_count() or 1
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


class Settings:

    LOG_LEVEL: str = os.getenv("KLEIN_PILOT_LOG_LEVEL", "INFO")

    # Parallelism cap for grid synthesis and ensemble integration
    THREADS: int = _threads_from_env()

    # Directory settings
    OUTPUT_DIR: str = OUTPUT_DIR

    # Numerical tolerances
    BAND_EDGE_TOL: float = float(
        os.getenv("KLEIN_PILOT_BAND_EDGE_TOL", BAND_EDGE_TOL)
    )
    KAPPA_SINGULAR_TOL: float = KAPPA_SINGULAR_TOL
    NODE_EPSILON: float = float(
        os.getenv("KLEIN_PILOT_NODE_EPSILON", NODE_EPSILON)
    )
    LEDGER_TOLERANCE: float = float(
        os.getenv("KLEIN_PILOT_LEDGER_TOLERANCE", LEDGER_TOLERANCE)
    )
    QUADRATURE_TOLERANCE: float = float(
        os.getenv("KLEIN_PILOT_QUADRATURE_TOLERANCE", QUADRATURE_TOLERANCE)
    )
