import math
from unittest.mock import patch

import numpy as np
import pytest
from scipy.integrate import cumulative_simpson
from scipy.stats import kstest

from src.scenarios.schemas import Scenario
from src.services.trajectories import SeedDirection, SeedLabel
from src.services.trajectories.exceptions import EmptySlice
from src.services.trajectories.sampling import (
    incident_window,
    sample_ensemble,
    slice_density,
    spacetime_weights,
)

K0 = 1.0 / math.sqrt(3.0)


def narrow(**fields):
    values = dict(
        name="narrow",
        k0=K0,
        x0=-40.0,
        wave_spread=10.0,
        box_half_width=300.0,
        grid_spacing=0.25,
        quadrature_order=384,
        window_sigmas=6.0,
    )
    values.update(fields)
    return Scenario(**values)


@pytest.fixture
def free_packet():
    return narrow(name="narrow-free", x0=0.0, final_time=50.0)


@pytest.fixture
def klein_step():
    return narrow(name="narrow-klein", potential=3.0)


class TestSpacetimeWeights:
    def test_non_klein_scenarios_start_on_first_slice(self, free_packet):
        assert spacetime_weights(free_packet) == (1.0, 0.0)
        assert spacetime_weights(narrow(potential=1.0)) == (1.0, 0.0)

    def test_klein_weights_sum_to_one(self, klein_step):
        incident, pair = spacetime_weights(klein_step)
        assert 0.0 < pair < 1.0
        assert incident + pair == pytest.approx(1.0, abs=1e-12)


class TestSampleEnsemble:
    def test_single_seed_in_window(self, free_packet):
        for mode in ("gaussian", "born"):
            (seed,) = sample_ensemble(free_packet, 1, 3, mode=mode)
            low, high = incident_window(free_packet)
            assert low <= seed.x0 <= high
            assert seed.t0 == 0.0
            assert seed.index == 0

    def test_rejects_empty_ensemble(self, free_packet):
        with pytest.raises(ValueError):
            sample_ensemble(free_packet, 0, 3)

    def test_same_seed_same_ensemble(self, klein_step):
        first = sample_ensemble(klein_step, 50, 11)
        second = sample_ensemble(klein_step, 50, 11)
        assert first == second
        assert sample_ensemble(klein_step, 50, 12) != first

    def test_born_samples_follow_slice_density(self, free_packet):
        seeds = sample_ensemble(free_packet, 1000, 5, mode="born")
        x, density = slice_density(
            free_packet, 0.0, incident_window(free_packet)
        )
        cumulative = cumulative_simpson(density, x=x, initial=0.0)
        cdf = cumulative / cumulative[-1]

        result = kstest(
            [seed.x0 for seed in seeds], lambda v: np.interp(v, x, cdf)
        )
        assert result.statistic < 0.05

    def test_gaussian_samples_centred_on_packet(self, free_packet):
        seeds = sample_ensemble(free_packet, 2000, 8)
        positions = np.array([seed.x0 for seed in seeds])
        assert abs(positions.mean() - free_packet.x0) < 1.0
        assert positions.std() == pytest.approx(
            free_packet.wave_spread, rel=0.1
        )

    def test_gaussian_spread_is_lambda_not_density_width(self, klein_step):
        seeds = sample_ensemble(klein_step, 4000, 9)
        incident = np.array(
            [s.x0 for s in seeds if s.label is not SeedLabel.PAIR_BRANCH]
        )
        assert abs(incident.mean() - klein_step.x0) < 1.0
        assert incident.std() == pytest.approx(
            klein_step.wave_spread, rel=0.1
        )
        assert incident.std() > 1.2 * klein_step.wave_spread / math.sqrt(2)

    def test_klein_pair_fraction(self, klein_step):
        n = 1000
        seeds = sample_ensemble(klein_step, n, 2)
        pairs = [s for s in seeds if s.label is SeedLabel.PAIR_BRANCH]
        _, weight = spacetime_weights(klein_step)
        sigma = math.sqrt(weight * (1.0 - weight) / n)
        assert abs(len(pairs) / n - weight) < 3.0 * sigma

        for seed in pairs:
            assert seed.direction is SeedDirection.BACKWARD
            assert seed.t0 == pytest.approx(klein_step.tau_final)
            assert 0.0 <= seed.x0 <= klein_step.box
        assert [s.index for s in seeds] == list(range(n))

    def test_empty_slice(self, free_packet):
        x = np.linspace(-300.0, 300.0, 101)
        with patch(
            "src.services.trajectories.sampling.slice_density",
            return_value=(x, np.zeros_like(x)),
        ):
            with pytest.raises(EmptySlice):
                sample_ensemble(free_packet, 10, 1)
