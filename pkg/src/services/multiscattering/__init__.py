from src.services.multiscattering.report import AppendixCheck, appendix_check
from src.services.multiscattering.schemas import ScatteringSeries
from src.services.multiscattering.series import (
    contraction_factor,
    kappa_bound_check,
    scattering_series,
    series_terms,
)

__all__ = [
    "AppendixCheck",
    "ScatteringSeries",
    "appendix_check",
    "contraction_factor",
    "kappa_bound_check",
    "scattering_series",
    "series_terms",
]
