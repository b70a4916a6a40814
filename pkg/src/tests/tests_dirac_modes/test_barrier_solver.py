import math

import numpy as np
import pytest

from src.services.dirac_modes.classification import (
    interior_spinor_ratio,
    outer_spinor_ratio,
)
from src.services.dirac_modes.exceptions import BarrierOverflow, WrongCase
from src.services.dirac_modes.implementations import (
    BarrierSolver,
    barrier_probabilities,
    barrier_solution,
)
from src.services.dirac_modes.schemas import PhysicalParams, ScatteringCase


def draw_barrier_params(rng, case):
    mass = 1.0
    width = rng.uniform(0.1, 5.0) if case == "case2" else rng.uniform(1, 300)
    if case == "case1":
        potential = rng.uniform(0.1, 3.0)
        energy = rng.uniform(potential + mass + 0.01, potential + 4.0)
    elif case == "case2":
        potential = rng.uniform(0.5, 4.0)
        energy = rng.uniform(
            max(potential - mass, mass) + 0.01, potential + mass - 0.01
        )
    else:
        potential = rng.uniform(2.5, 8.0)
        energy = rng.uniform(mass + 0.01, potential - mass - 0.01)
    return PhysicalParams(
        mass=mass, potential=potential, width=width, energy=energy
    )


def matched_by_linear_solve(solution):
    """Solve the four continuity conditions for R, B, D, T."""
    params = solution.params
    c_p = outer_spinor_ratio(params)
    c_k = interior_spinor_ratio(params, solution.k.value)
    s = solution.interior_phase_sign
    a = solution.incident
    u = np.exp(1j * s * solution.k.value * params.width)
    e_p = np.exp(1j * solution.p.value * params.width)

    matrix = np.array(
        [
            [1.0, -1.0, -1.0, 0.0],
            [-c_p, -c_k, c_k, 0.0],
            [0.0, u, 1.0 / u, -e_p],
            [0.0, c_k * u, -c_k / u, -c_p * e_p],
        ],
        dtype=complex,
    )
    rhs = np.array([-a, -c_p * a, 0.0, 0.0], dtype=complex)
    return np.linalg.solve(matrix, rhs)


@pytest.fixture
def rng():
    return np.random.default_rng(1930)


class TestBarrierIdentities:
    @pytest.mark.parametrize("case", ["case1", "case2", "case3"])
    def test_unitarity(self, rng, case):
        for _ in range(1000):
            solution = barrier_solution(draw_barrier_params(rng, case))
            residual = (
                abs(solution.reflected) ** 2
                + abs(solution.transmitted) ** 2
                - abs(solution.incident) ** 2
            )
            assert abs(residual) < 1e-12

    @pytest.mark.parametrize("case", ["case1", "case2", "case3"])
    def test_closed_form_matches_linear_solve(self, rng, case):
        for _ in range(1000):
            solution = barrier_solution(draw_barrier_params(rng, case))
            r, b, d, t = matched_by_linear_solve(solution)
            scale = abs(solution.incident)
            assert abs(solution.reflected - r) <= 1e-10 * scale
            assert abs(solution.transmitted - t) <= 1e-10 * scale
            assert abs(solution.interior_forward - b) <= 1e-10 * max(
                scale, abs(b)
            )
            assert abs(solution.interior_backward - d) <= 1e-10 * max(
                scale, abs(d)
            )

    @pytest.mark.parametrize("case", ["case1", "case3"])
    def test_trigonometric_probabilities(self, rng, case):
        for _ in range(200):
            solution = barrier_solution(draw_barrier_params(rng, case))
            probabilities = barrier_probabilities(solution)
            assert probabilities.reflection == pytest.approx(
                abs(solution.reflected) ** 2, abs=1e-12
            )
            assert probabilities.transmission == pytest.approx(
                abs(solution.transmitted) ** 2, abs=1e-12
            )


class TestResonance:
    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
    def test_full_transmission_when_kl_is_multiple_of_pi(self, n):
        k = math.sqrt(7.0) / 3.0
        params = PhysicalParams(
            potential=3.0, width=n * math.pi / k, energy=5.0 / 3.0
        )
        solution = barrier_solution(params)
        assert solution.label.case is ScatteringCase.CASE3
        assert abs(solution.transmitted) ** 2 == pytest.approx(1.0, abs=1e-12)
        assert barrier_probabilities(solution).transmission == pytest.approx(
            1.0, abs=1e-12
        )


class TestBarrierSolver:
    def test_step_params_rejected(self):
        with pytest.raises(WrongCase):
            BarrierSolver().solve(PhysicalParams(potential=3.0, energy=1.5))

    def test_opaque_barrier_returns_total_reflection(self):
        params = PhysicalParams(potential=2.0, width=1000.0, energy=2.0)
        solution = BarrierSolver().solve(params)
        assert solution.overflow
        assert solution.transmitted == 0.0
        assert abs(solution.reflected) == pytest.approx(1.0)

    def test_opaque_barrier_can_raise(self):
        params = PhysicalParams(potential=2.0, width=1000.0, energy=2.0)
        with pytest.raises(BarrierOverflow):
            BarrierSolver(raise_on_overflow=True).solve(params)

    def test_probabilities_need_propagating_interior(self):
        params = PhysicalParams(potential=2.0, width=1.0, energy=2.0)
        with pytest.raises(WrongCase):
            barrier_probabilities(barrier_solution(params))

    @pytest.mark.parametrize(
        "potential, width, energy",
        [
            (1.0 / 3.0, 200.0, 5.0 / 3.0),
            (2.0, 1.0, 5.0 / 3.0),
            (3.0, 100.0, 5.0 / 3.0),
        ],
    )
    def test_region_modes_continuous(self, potential, width, energy):
        solver = BarrierSolver()
        solution = solver.solve(
            PhysicalParams(potential=potential, width=width, energy=energy)
        )
        regions = solver.region_modes(solution)
        assert [(lo, hi) for lo, hi, _ in regions] == [
            (-math.inf, 0.0),
            (0.0, width),
            (width, math.inf),
        ]

        def value(modes, x):
            return np.sum([mode.evaluate(x) for mode in modes], axis=0)

        (_, _, left), (_, _, inner), (_, _, right) = regions
        np.testing.assert_allclose(
            value(left, 0.0), value(inner, 0.0), atol=1e-12
        )
        np.testing.assert_allclose(
            value(inner, width), value(right, width), atol=1e-12
        )
