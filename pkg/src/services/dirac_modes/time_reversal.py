from src.services.dirac_modes.schemas import PlaneWaveMode


def time_reverse_mode(mode: PlaneWaveMode) -> PlaneWaveMode:
    """
    Conjugate the spatial phase of a negative-energy region mode.

    exp(i k x) becomes exp(-i k* x); the spinor column and amplitude are
    unchanged, so the value at x = 0 is preserved and applying the map
    twice returns the original mode.
    """
    return mode.model_copy(
        update={"wavenumber": -mode.wavenumber.conjugate()}
    )
