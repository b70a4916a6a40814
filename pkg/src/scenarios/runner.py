from __future__ import annotations

import json
import logging
from pathlib import Path
from typing import List, Optional

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from src.core.constants import EXIT_OK, SPEED_SLACK
from src.scenarios.decorators import exit_code_for
from src.scenarios.exceptions import InvariantFailure
from src.scenarios.schemas import Scenario
from src.services.accounting import build_ledger, check_ledger
from src.services.accounting.exceptions import LedgerResidualExceeded
from src.services.accounting.export import write_ledger_json
from src.services.accounting.schemas import ProbabilityLedger
from src.services.dirac_modes.schemas import ScatteringCase
from src.services.multiscattering import appendix_check
from src.services.trajectories import (
    check_no_crossing,
    integrate_ensemble,
    sample_ensemble,
)
from src.services.trajectories.export import (
    write_ensemble_manifest,
    write_trajectories_csv,
)
from src.services.trajectories.schemas import CrossingReport
from src.services.wavepacket import synthesize_field
from src.services.wavepacket.export import write_field_csv
from src.services.wavepacket.schemas import FieldGrid
from src.utils import OutputPaths, WallClock

logger = logging.getLogger(__name__)


class RunOutputs(BaseModel):
    """Which artifacts a run writes, and where."""

    model_config = ConfigDict(frozen=True)

    out_dir: Path
    field: bool = True
    trajectories: bool = True
    ledger: bool = True
    check_appendix: bool = False
    refine: int = Field(default=0, ge=0)


class RunReport(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True)

    scenario: Scenario
    ledger: ProbabilityLedger
    crossing: Optional[CrossingReport] = None
    residual_trend: List[float] = Field(default_factory=list)
    appendix_table: Optional[str] = None
    files: dict[str, str] = Field(default_factory=dict)
    wall_time: float = 0.0
    failures: List[str] = Field(default_factory=list)


def refined(scenario: Scenario, level: int) -> Scenario:
    """Quadrature order times 2^level, grid spacing over 2^level."""
    if level == 0:
        return scenario
    factor = 2**level
    return scenario.model_copy(
        update={
            "quadrature_order": scenario.quadrature_order * factor,
            "grid_spacing": scenario.spacing / factor,
        }
    )


def check_causality(field: FieldGrid) -> None:
    excess = np.abs(field.current) - field.density * (1.0 + SPEED_SLACK)
    worst = float(excess.max())
    if worst > 0.0:
        raise InvariantFailure(
            "causality", f"|J1| exceeds J0 by {worst:.3e} on the grid"
        )


def residual_trend(scenario: Scenario, levels: int) -> List[float]:
    """Ledger residual at refinement levels 0..levels - 1."""
    trend = []
    for level in range(levels):
        current = refined(scenario, level)
        field = synthesize_field(
            current,
            verify_quadrature=False,
            times=[0.0, current.tau_final],
        )
        trend.append(build_ledger(current, field).residual)
    logger.info(f"Residual trend for '{scenario.name}': {trend}")
    return trend


def _is_klein_barrier(scenario: Scenario) -> bool:
    return (
        scenario.geometry == "barrier"
        and scenario.case is ScatteringCase.CASE3
    )


def write_manifest(
    paths: OutputPaths, report: RunReport, status: int
) -> Path:
    manifest = {
        "scenario": report.scenario.model_dump(mode="json"),
        "files": report.files,
        "wall_time": report.wall_time,
        "exit_status": status,
        "ledger_residual": report.ledger.residual,
        "residual_trend": report.residual_trend,
        "crossing_violations": (
            report.crossing.violations if report.crossing else None
        ),
        "failures": report.failures,
    }
    path = paths[OutputPaths.MANIFEST]
    path.write_text(json.dumps(manifest, indent=2))
    return path


def run(scenario: Scenario, outputs: RunOutputs) -> RunReport:
    """
    Synthesize the field, integrate the ensemble, build the ledger and
    write the selected artifacts.

    Artifacts and the manifest are written before a failed check is
    raised, so a failing run still leaves its evidence behind.
    """
    paths = OutputPaths(outputs.out_dir)
    outputs.out_dir.mkdir(parents=True, exist_ok=True)
    base, scenario = scenario, refined(scenario, outputs.refine)
    written: List[Path] = []
    failures: List[Exception] = []

    with WallClock() as clock:
        field = synthesize_field(scenario)
        try:
            check_causality(field)
        except InvariantFailure as exc:
            failures.append(exc)

        crossing = None
        trajectories = []
        if outputs.trajectories:
            seeds = sample_ensemble(
                scenario, scenario.ensemble_size, scenario.rng_seed
            )
            trajectories = integrate_ensemble(seeds, scenario)
            crossing = check_no_crossing(trajectories)
            if not crossing.ok:
                failures.append(
                    InvariantFailure(
                        "no-crossing", str(crossing.first_violation)
                    )
                )

        ledger = build_ledger(scenario, field)
        trend = residual_trend(base, outputs.refine) + [ledger.residual]

        table = None
        if outputs.check_appendix:
            if _is_klein_barrier(scenario):
                check, table = appendix_check(scenario)
                if not check.ok:
                    failures.append(InvariantFailure("appendix", str(check)))
            else:
                logger.warning(
                    "The multiple-scattering series applies to Klein "
                    f"barriers only; skipped for '{scenario.name}'"
                )

        if outputs.field:
            written.append(write_field_csv(field, paths[OutputPaths.FIELD]))
        if outputs.trajectories:
            written.append(
                write_trajectories_csv(
                    trajectories, paths[OutputPaths.TRAJECTORIES]
                )
            )
            written.append(
                write_ensemble_manifest(
                    trajectories, paths[OutputPaths.ENSEMBLE]
                )
            )
        if outputs.ledger:
            written.append(
                write_ledger_json(ledger, paths[OutputPaths.LEDGER])
            )
        if table is not None:
            appendix_path = paths[OutputPaths.APPENDIX]
            appendix_path.write_text(table + "\n")
            written.append(appendix_path)

    try:
        check_ledger(ledger)
    except LedgerResidualExceeded as exc:
        failures.insert(0, exc)

    report = RunReport(
        scenario=scenario,
        ledger=ledger,
        crossing=crossing,
        residual_trend=trend,
        appendix_table=table,
        files=paths.content_hashes(written),
        wall_time=clock.seconds,
        failures=[str(exc) for exc in failures],
    )

    status = exit_code_for(failures[0]) if failures else EXIT_OK
    write_manifest(paths, report, status)
    if failures:
        raise failures[0]
    return report
