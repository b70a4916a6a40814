import math

import numpy as np
import pytest

from src.scenarios.presets import preset
from src.scenarios.schemas import Scenario
from src.services.accounting import (
    LedgerIdentity,
    barrier_leak_study,
    build_ledger,
    check_ledger,
    ledger_identity,
    slice_probability,
    spacetime_partition,
)
from src.services.accounting.exceptions import (
    LedgerResidualExceeded,
    SliceMissing,
)
from src.services.accounting.export import (
    ledger_document,
    write_ledger_json,
)
from src.services.dirac_modes.exceptions import WrongCase
from src.services.dirac_modes.implementations import (
    barrier_solution,
    step_solution,
)
from src.services.dirac_modes.schemas import PhysicalParams
from src.services.wavepacket.schemas import FieldGrid
from src.services.wavepacket.synthesis import synthesize_field

K0 = 1.0 / math.sqrt(3.0)


def make_field(x, t, rows):
    density = np.array(rows, dtype=float)
    zeros = np.zeros_like(density, dtype=complex)
    return FieldGrid(
        x=x,
        t=np.asarray(t, dtype=float),
        phi_plus=zeros,
        phi_minus=zeros,
        density=density,
        current=np.zeros_like(density),
    )


@pytest.fixture
def grid():
    return np.linspace(-10.0, 10.0, 2001)


@pytest.fixture
def split_field(grid):
    """Packet at -5 splitting 3:7 into packets at -5 and +5."""
    packet = np.exp(-4.0 * (grid + 5.0) ** 2)
    later = 0.3 * packet + 0.7 * np.exp(-4.0 * (grid - 5.0) ** 2)
    return make_field(grid, [0.0, 5.0], [packet, later])


@pytest.fixture
def plain_step():
    return Scenario(
        name="plain-step",
        potential=K0 - 0.5,
        k0=K0,
        x0=-5.0,
        wave_spread=1.0,
        box_half_width=10.0,
        final_time=5.0,
    )


class TestSliceProbability:
    def test_gaussian_mass(self, grid):
        field = make_field(grid, [0.0], [np.exp(-(grid**2))])
        assert slice_probability(field, 0.0, -10.0, 10.0) == pytest.approx(
            math.sqrt(math.pi), rel=1e-8
        )

    def test_zero_field(self, grid):
        field = make_field(grid, [0.0], [np.zeros_like(grid)])
        assert slice_probability(field, 0.0, -10.0, 10.0) == 0.0

    def test_adjacent_intervals_add_up(self, split_field):
        whole = slice_probability(split_field, 5.0, -10.0, 10.0)
        left = slice_probability(split_field, 5.0, -10.0, 0.37)
        right = slice_probability(split_field, 5.0, 0.37, 10.0)
        assert left + right == pytest.approx(whole, abs=1e-12)

    def test_missing_slice(self, split_field):
        with pytest.raises(SliceMissing) as info:
            slice_probability(split_field, 2.5, -10.0, 10.0)
        assert info.value.nearest in (0.0, 5.0)

    def test_reversed_interval(self, split_field):
        with pytest.raises(ValueError):
            slice_probability(split_field, 0.0, 1.0, -1.0)


class TestLedgerIdentity:
    @pytest.mark.parametrize(
        "name, identity",
        [
            ("step-case1", LedgerIdentity.PLAIN),
            ("step-case2", LedgerIdentity.PLAIN),
            ("step-case3", LedgerIdentity.STEP3),
            ("barrier-case1", LedgerIdentity.PLAIN),
            ("barrier-case2", LedgerIdentity.PLAIN),
            ("barrier-case3", LedgerIdentity.BARRIER),
        ],
    )
    def test_presets(self, name, identity):
        assert ledger_identity(preset(name)) is identity

    def test_equations(self):
        assert LedgerIdentity.STEP3.equation == "P_A + P_T = P_R"
        assert LedgerIdentity.BARRIER.equation == "P_R + P_T + P_B = P_A"


class TestBuildLedger:
    def test_split_packet_balances(self, plain_step, split_field):
        ledger = build_ledger(plain_step, split_field)
        assert ledger.identity is LedgerIdentity.PLAIN
        assert ledger.p_r == pytest.approx(0.3 * ledger.p_a, rel=1e-9)
        assert ledger.p_t == pytest.approx(0.7 * ledger.p_a, rel=1e-9)
        assert ledger.residual < 1e-9
        assert ledger.box_edge.worst < 1e-12
        assert ledger.grid_meta.nodes == 2001
        assert check_ledger(ledger) is ledger

    def test_lost_probability_fails_check(self, plain_step, grid):
        packet = np.exp(-4.0 * (grid + 5.0) ** 2)
        field = make_field(grid, [0.0, 5.0], [packet, 0.9 * packet])
        ledger = build_ledger(plain_step, field)
        assert ledger.residual == pytest.approx(0.1, rel=1e-9)
        with pytest.raises(LedgerResidualExceeded):
            check_ledger(ledger)
        assert check_ledger(ledger, tolerance=0.2) is ledger

    def test_document_keys(self, plain_step, split_field, tmp_path):
        ledger = build_ledger(plain_step, split_field)
        document = ledger_document(ledger)
        assert {"P_A", "P_R", "P_T", "P_B"} <= set(document)
        assert document["equation"] == "P_R + P_T = P_A"
        assert document["identity"] == "plain"

        path = write_ledger_json(ledger, tmp_path / "ledger.json")
        assert '"P_A"' in path.read_text()


class TestSpacetimePartition:
    @pytest.mark.parametrize("potential", [2.5, 3.0, 10.0, 1e4])
    def test_klein_step_weights_sum_to_one(self, potential):
        params = PhysicalParams(potential=potential, energy=2.0 / math.sqrt(3))
        partition = spacetime_partition(step_solution(params))
        assert partition == pytest.approx(1.0, abs=1e-12)

    def test_other_cases(self):
        plain = PhysicalParams(potential=0.1, energy=2.0)
        with pytest.raises(WrongCase):
            spacetime_partition(step_solution(plain))
        barrier = PhysicalParams(potential=3.0, width=10.0, energy=5 / 3)
        with pytest.raises(WrongCase):
            spacetime_partition(barrier_solution(barrier))


class TestLeakStudy:
    def test_requires_barrier(self, plain_step):
        with pytest.raises(WrongCase):
            barrier_leak_study(plain_step, [5.0])


@pytest.mark.slow
class TestPresetLedgers:
    @pytest.mark.parametrize(
        "name", ["step-case3", "barrier-case3", "barrier-case1"]
    )
    def test_residual_within_tolerance(self, name):
        scenario = preset(name)
        ledger = build_ledger(scenario, synthesize_field(scenario))
        check_ledger(ledger, tolerance=5e-3)

    def test_barrier_leak_decreases_over_doublings(self):
        study = barrier_leak_study(
            preset("barrier-case3"), [300.0, 600.0, 1200.0, 2400.0]
        )
        fractions = [row.leak_fraction for row in study.rows]
        assert fractions[0] > 0.0
        assert fractions[1] < fractions[0]
        # below 1e-12 the slice integral sits at the quadrature floor
        for nearer, further in zip(fractions, fractions[1:]):
            assert further < nearer or further < 1e-12
