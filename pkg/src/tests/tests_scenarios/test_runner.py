import json
import math
from unittest.mock import patch

import numpy as np
import pytest

from src.scenarios import RunOutputs, preset, run
from src.scenarios.exceptions import InvariantFailure
from src.scenarios.runner import check_causality, refined
from src.scenarios.schemas import Scenario
from src.services.accounting.exceptions import LedgerResidualExceeded
from src.services.wavepacket.schemas import FieldGrid
from src.utils import OutputPaths

K0 = 1.0 / math.sqrt(3.0)


def make_field(rows, current=None):
    x = np.linspace(-10.0, 10.0, 401)
    density = np.array([row(x) for row in rows])
    zeros = np.zeros_like(density, dtype=complex)
    return FieldGrid(
        x=x,
        t=np.array([0.0, 5.0]),
        phi_plus=zeros,
        phi_minus=zeros,
        density=density,
        current=np.zeros_like(density) if current is None else current,
    )


def packet(centre, weight=1.0):
    return lambda x: weight * np.exp(-4.0 * (x - centre) ** 2)


@pytest.fixture
def scenario():
    return Scenario(
        name="mock-step",
        potential=K0 - 0.5,
        k0=K0,
        x0=-5.0,
        wave_spread=1.0,
        box_half_width=10.0,
        final_time=5.0,
    )


@pytest.fixture
def balanced_field():
    def split(x):
        return packet(-5.0, 0.3)(x) + packet(5.0, 0.7)(x)

    return make_field([packet(-5.0), split])


def field_only(tmp_path):
    return RunOutputs(out_dir=tmp_path / "run", trajectories=False)


class TestRefined:
    def test_levels(self, scenario):
        assert refined(scenario, 0) is scenario
        finer = refined(scenario, 2)
        assert finer.quadrature_order == 4 * scenario.quadrature_order
        assert finer.spacing == pytest.approx(scenario.spacing / 4)


class TestCheckCausality:
    def test_current_above_density(self):
        field = make_field(
            [packet(0.0), packet(0.0)],
            current=np.full((2, 401), 2.0),
        )
        with pytest.raises(InvariantFailure) as info:
            check_causality(field)
        assert info.value.check == "causality"


class TestRun:
    def test_writes_artifacts_and_manifest(
        self, scenario, balanced_field, tmp_path
    ):
        outputs = field_only(tmp_path)
        with patch(
            "src.scenarios.runner.synthesize_field",
            return_value=balanced_field,
        ):
            report = run(scenario, outputs)

        assert report.ledger.residual < 1e-9
        assert report.residual_trend == [report.ledger.residual]
        assert set(report.files) == {"field.csv", "ledger.json"}

        paths = OutputPaths(outputs.out_dir)
        manifest = json.loads(paths[OutputPaths.MANIFEST].read_text())
        assert manifest["exit_status"] == 0
        assert manifest["files"]["ledger.json"] == OutputPaths.content_hash(
            paths[OutputPaths.LEDGER]
        )

    def test_ledger_failure_still_writes_evidence(self, scenario, tmp_path):
        leaking = make_field([packet(-5.0), packet(-5.0, 0.9)])
        outputs = field_only(tmp_path)
        with patch(
            "src.scenarios.runner.synthesize_field", return_value=leaking
        ):
            with pytest.raises(LedgerResidualExceeded):
                run(scenario, outputs)

        paths = OutputPaths(outputs.out_dir)
        manifest = json.loads(paths[OutputPaths.MANIFEST].read_text())
        assert manifest["exit_status"] == 3
        assert paths[OutputPaths.LEDGER].is_file()

    def test_appendix_skipped_outside_klein_barrier(
        self, scenario, balanced_field, tmp_path
    ):
        outputs = RunOutputs(
            out_dir=tmp_path / "run", trajectories=False, check_appendix=True
        )
        with patch(
            "src.scenarios.runner.synthesize_field",
            return_value=balanced_field,
        ):
            report = run(scenario, outputs)
        assert report.appendix_table is None
        assert not OutputPaths(outputs.out_dir)[OutputPaths.APPENDIX].exists()

    def test_refinement_trend(self, scenario, balanced_field, tmp_path):
        outputs = RunOutputs(
            out_dir=tmp_path / "run",
            field=False,
            trajectories=False,
            refine=2,
        )
        with patch(
            "src.scenarios.runner.synthesize_field",
            return_value=balanced_field,
        ) as synthesize:
            report = run(scenario, outputs)
        assert len(report.residual_trend) == 3
        assert synthesize.call_count == 3
        assert report.scenario.quadrature_order == (
            4 * scenario.quadrature_order
        )


@pytest.mark.slow
class TestEndToEnd:
    def test_klein_barrier_run(self, tmp_path):
        scenario = preset("barrier-case3", ensemble_size=6)
        report = run(
            scenario, RunOutputs(out_dir=tmp_path, check_appendix=True)
        )
        assert report.crossing.ok
        assert report.appendix_table is not None
        assert set(report.files) == {
            "field.csv",
            "trajectories.csv",
            "ensemble.json",
            "ledger.json",
            "appendix.txt",
        }

    def test_step_residual_drops_under_refinement(self, tmp_path):
        report = run(
            preset("step-case3"),
            RunOutputs(
                out_dir=tmp_path, field=False, trajectories=False, refine=1
            ),
        )
        coarse, fine = report.residual_trend
        assert fine < coarse

    def test_same_seed_same_bytes(self, tmp_path):
        scenario = Scenario(
            name="narrow-step",
            potential=K0 - 0.5,
            k0=K0,
            x0=-40.0,
            wave_spread=10.0,
            box_half_width=200.0,
            grid_spacing=0.25,
            quadrature_order=256,
            final_time=60.0,
            ensemble_size=4,
            rng_seed=17,
        )
        reports = []
        for name in ("first", "second"):
            with patch("src.scenarios.runner.check_ledger"):
                reports.append(
                    run(scenario, RunOutputs(out_dir=tmp_path / name))
                )

        first, second = reports
        assert first.files == second.files
        assert set(first.files) == {
            "field.csv",
            "trajectories.csv",
            "ensemble.json",
            "ledger.json",
        }
        for name in first.files:
            assert (tmp_path / "first" / name).read_bytes() == (
                tmp_path / "second" / name
            ).read_bytes()
