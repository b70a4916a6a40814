import math
import os
from typing import Dict, Tuple

from dotenv import load_dotenv

load_dotenv()

# Tolerances
BAND_EDGE_TOL: float = 1e-12
KAPPA_SINGULAR_TOL: float = 1e-14
NODE_EPSILON: float = 1e-30
EVANESCENT_OVERFLOW_LIMIT: float = 700.0
QUADRATURE_TOLERANCE: float = 1e-4
LEDGER_TOLERANCE: float = 5e-3

# Trajectory integration
DT_MAX: float = 0.1
DT_MIN: float = 1e-6
RELATIVE_DENSITY_FLOOR: float = 1e-8
MAX_VELOCITY_JUMP: float = 0.1
INTERFACE_STEP: float = 1e-3
SPEED_SLACK: float = 1e-9

# Packet synthesis
DEFAULT_QUADRATURE_ORDER: int = 256
WINDOW_SIGMAS: float = 8.0
DEFAULT_TIME_SLICES: int = 101

# Ensembles
DEFAULT_ENSEMBLE_SIZE: int = 50
DEFAULT_RNG_SEED: int = 20170601

# Output
FLOAT_DIGITS: int = 17
OUTPUT_DIR: str = os.getenv("KLEIN_PILOT_OUTPUT_DIR", "output")

# CLI exit codes
EXIT_OK: int = 0
EXIT_INVARIANT_FAILURE: int = 2
EXIT_LEDGER_FAILURE: int = 3
EXIT_CONFIG_ERROR: int = 4

SQRT3: float = math.sqrt(3.0)

# Preset parameter tables: m = 1 throughout
STEP_K0: float = 1.0 / SQRT3
BARRIER_K0: float = 4.0 / 3.0
# lambda = 100 packets; resolves the 2 K0 interference fringes
FINE_SPACING: float = 0.5

PRESETS: Dict[str, Dict[str, object]] = {
    "step-case0": {
        "geometry": "step",
        "potential": 0.0,
        "width": 0.0,
        "k0": 0.0,
        "wave_spread": 0.1,
        "x0": 0.0,
        "box_half_width": 20.0,
        "grid_spacing": 0.005,
        "quadrature_order": 1024,
        "final_time": 15.0,
        "free_branches": "both",
    },
    "step-case1": {
        "geometry": "step",
        "potential": 1.0 / SQRT3 - 0.5,
        "width": 0.0,
        "k0": STEP_K0,
        "wave_spread": 100.0,
        "x0": -300.0,
        "grid_spacing": FINE_SPACING,
    },
    "step-case2": {
        "geometry": "step",
        "potential": 2.0,
        "width": 0.0,
        "k0": STEP_K0,
        "wave_spread": 100.0,
        "x0": -300.0,
        "grid_spacing": FINE_SPACING,
    },
    "step-case3": {
        "geometry": "step",
        "potential": 3.0,
        "width": 0.0,
        "k0": STEP_K0,
        "wave_spread": 100.0,
        "x0": -300.0,
        "grid_spacing": FINE_SPACING,
    },
    "barrier-case1": {
        "geometry": "barrier",
        "potential": 1.0 / 3.0,
        "width": 200.0,
        "k0": BARRIER_K0,
        "wave_spread": 100.0,
        "x0": -300.0,
        "grid_spacing": FINE_SPACING,
    },
    "barrier-case2": {
        "geometry": "barrier",
        "potential": 2.0,
        "width": 1.0,
        "k0": BARRIER_K0,
        "wave_spread": 100.0,
        "x0": -300.0,
        "grid_spacing": FINE_SPACING,
    },
    "barrier-case3": {
        "geometry": "barrier",
        "potential": 3.0,
        "width": 100.0,
        "k0": BARRIER_K0,
        "wave_spread": 100.0,
        "x0": -300.0,
        "grid_spacing": FINE_SPACING,
    },
}

PRESET_NAMES: Tuple[str, ...] = tuple(PRESETS)
