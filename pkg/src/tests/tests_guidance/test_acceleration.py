import math
from unittest.mock import patch

import numpy as np
import pytest

from src.scenarios.presets import preset
from src.scenarios.schemas import Scenario
from src.services.guidance import acceleration_decomposition, velocity_field
from src.services.guidance.exceptions import ReversedRegionError
from src.services.wavepacket import FieldEvaluator


def path_derivative(scenario, x, t, dt=1e-4):
    """Central difference of v along the flow through (x, t)."""
    _, _, (v,) = velocity_field(scenario, [x], t)
    _, _, (ahead,) = velocity_field(scenario, [x + v * dt], t + dt)
    _, _, (behind,) = velocity_field(scenario, [x - v * dt], t - dt)
    return (ahead - behind) / (2.0 * dt)


@pytest.fixture
def moving_packet():
    return Scenario(
        name="moving",
        potential=1.0 / math.sqrt(3.0) - 0.5,
        k0=1.0 / math.sqrt(3.0),
        x0=-40.0,
        wave_spread=10.0,
        box_half_width=200.0,
        grid_spacing=0.25,
        quadrature_order=256,
    )


class TestAccelerationDecomposition:
    def test_matches_path_derivative_near_step(self, moving_packet):
        checked = 0
        t = moving_packet.arrival_time
        xs = np.linspace(-30.0, 30.0, 121)
        for x in xs:
            density, _, velocity = velocity_field(moving_packet, [x], t)
            if abs(velocity[0]) >= 0.9 or abs(x) < 0.05:
                continue
            terms = acceleration_decomposition(moving_packet, x, t)
            expected = path_derivative(moving_packet, x, t)
            assert terms.total == pytest.approx(
                expected, rel=1e-5, abs=1e-7
            )
            checked += 1
        assert checked >= 100

    def test_zitterbewegung_driven_by_spin_term(self):
        scenario = preset("step-case0")
        terms = [
            acceleration_decomposition(scenario, x, 0.4)
            for x in (-0.05, 0.0, 0.05)
        ]
        assert any(abs(term.spin) > 1e-3 for term in terms)
        for x, term in zip((-0.05, 0.0, 0.05), terms):
            assert term.total == pytest.approx(
                path_derivative(scenario, x, 0.4, dt=1e-5),
                rel=1e-4,
                abs=1e-6,
            )

    def test_invariant_under_field_scaling(self, moving_packet):
        base = acceleration_decomposition(moving_packet, -5.0, 60.0)
        scaled = FieldEvaluator(moving_packet, amplitude_scale=3.0 - 4.0j)
        with patch(
            "src.services.guidance.acceleration.field_evaluator",
            return_value=scaled,
        ):
            other = acceleration_decomposition(moving_packet, -5.0, 60.0)
        assert other.transport == pytest.approx(base.transport, rel=1e-10)
        assert other.spin == pytest.approx(base.spin, rel=1e-10, abs=1e-14)

    def test_reversed_region_rejected(self):
        with pytest.raises(ReversedRegionError):
            acceleration_decomposition(preset("step-case3"), 10.0, 600.0)
