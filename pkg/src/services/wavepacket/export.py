import csv
import logging
from pathlib import Path

from src.core.constants import FLOAT_DIGITS
from src.services.wavepacket.schemas import FieldGrid

logger = logging.getLogger(__name__)

FIELD_HEADER = (
    "t",
    "x",
    "re_phi_plus",
    "im_phi_plus",
    "re_phi_minus",
    "im_phi_minus",
    "density",
    "current",
)


def format_float(value: float) -> str:
    return f"{value:.{FLOAT_DIGITS}g}"


def write_field_csv(grid: FieldGrid, path: Path) -> Path:
    """Row-major in t then x."""
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", newline="") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(FIELD_HEADER)
        for i, t in enumerate(grid.t):
            for j, x in enumerate(grid.x):
                upper = grid.phi_plus[i, j]
                lower = grid.phi_minus[i, j]
                writer.writerow(
                    map(
                        format_float,
                        (
                            t,
                            x,
                            upper.real,
                            upper.imag,
                            lower.real,
                            lower.imag,
                            grid.density[i, j],
                            grid.current[i, j],
                        ),
                    )
                )

    logger.info(f"Field written to {path}")
    return path
