import math

import numpy as np
import pytest

from src.scenarios.schemas import Scenario
from src.services.dirac_modes.schemas import ScatteringCase
from src.services.wavepacket import EnergyDomain, PacketParams
from src.services.wavepacket.gaussian import gaussian_weight
from src.services.wavepacket.quadrature import (
    case_band,
    energy_domain,
    gauss_legendre,
)


class TestGaussianWeight:
    def test_unity_at_mean_momentum(self):
        packet = PacketParams(k0=0.5, x0=0.0, spread=100.0)
        assert gaussian_weight(0.5, packet) == pytest.approx(1.0)

    @pytest.mark.parametrize("sign", [-1.0, 1.0])
    def test_one_spread_away(self, sign):
        packet = PacketParams(k0=0.5, x0=0.0, spread=100.0)
        weight = gaussian_weight(0.5 + sign / 100.0, packet)
        assert weight == pytest.approx(math.exp(-0.5))

    def test_pure_phase_at_mean_momentum(self):
        packet = PacketParams(k0=0.5, x0=-300.0, spread=100.0)
        weight = gaussian_weight(0.5, packet)
        assert abs(weight) == pytest.approx(1.0)
        assert weight == pytest.approx(np.exp(1j * 0.5 * 300.0))

    def test_accepts_arrays(self):
        packet = PacketParams(k0=0.0, x0=1.0, spread=2.0)
        p = np.linspace(-1.0, 1.0, 5)
        weights = gaussian_weight(p, packet)
        assert weights.shape == (5,)
        np.testing.assert_allclose(
            weights, [gaussian_weight(value, packet) for value in p]
        )

    def test_spread_must_be_positive(self):
        with pytest.raises(ValueError):
            PacketParams(k0=0.0, x0=0.0, spread=0.0)


class TestEnergyDomain:
    @pytest.mark.parametrize(
        "potential, case",
        [
            (1.0 / math.sqrt(3.0) - 0.5, ScatteringCase.CASE1),
            (2.0, ScatteringCase.CASE2),
            (3.0, ScatteringCase.CASE3),
        ],
    )
    def test_domain_inside_band(self, potential, case):
        scenario = Scenario(
            potential=potential,
            k0=1.0 / math.sqrt(3.0),
            x0=-300.0,
            wave_spread=100.0,
        )
        assert scenario.case is case
        domain = energy_domain(scenario)
        band_lower, band_upper = case_band(case, 1.0, potential)
        assert band_lower <= domain.lower < domain.upper <= band_upper
        assert domain.lower < scenario.mean_energy < domain.upper

    def test_free_domain_is_in_momentum(self):
        scenario = Scenario(
            k0=0.0, x0=0.0, wave_spread=0.1, final_time=1.0
        )
        domain = energy_domain(scenario)
        assert domain.variable == "momentum"
        assert domain.lower == pytest.approx(-80.0)
        assert domain.upper == pytest.approx(80.0)

    def test_empty_interval_rejected(self):
        with pytest.raises(ValueError):
            EnergyDomain(lower=2.0, upper=2.0, order=8)

    def test_order_at_least_two(self):
        with pytest.raises(ValueError):
            EnergyDomain(lower=1.0, upper=2.0, order=1)


class TestGaussLegendre:
    def test_integrates_polynomials_exactly(self):
        domain = EnergyDomain(lower=1.0, upper=3.0, order=8)
        nodes, weights = gauss_legendre(domain)
        assert np.all((nodes > 1.0) & (nodes < 3.0))
        assert weights.sum() == pytest.approx(2.0)
        assert np.dot(weights, nodes**7) == pytest.approx(
            (3.0**8 - 1.0) / 8.0
        )
