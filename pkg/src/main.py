import argparse
import logging
import sys
from pathlib import Path
from typing import NoReturn, Optional, Sequence

from src.core.config import settings
from src.core.constants import EXIT_CONFIG_ERROR, EXIT_OK, PRESET_NAMES
from src.core.exceptions import ConfigError
from src.scenarios import RunOutputs, load_scenario, preset, run
from src.scenarios.decorators import exit_code_on_error
from src.scenarios.schemas import Scenario

logger = logging.getLogger(__name__)


class CommandLineParser(argparse.ArgumentParser):
    """Reports usage errors with the configuration-error exit code."""

    def error(self, message: str) -> NoReturn:
        self.print_usage(sys.stderr)
        self.exit(EXIT_CONFIG_ERROR, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = CommandLineParser(
        prog="klein-pilot",
        description="Pilot-wave simulation of Dirac step and barrier "
        "scattering",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    run_parser = commands.add_parser(
        "run", help="run a preset or a scenario config file"
    )
    source = run_parser.add_mutually_exclusive_group(required=True)
    source.add_argument(
        "preset", nargs="?", help=f"one of: {', '.join(PRESET_NAMES)}"
    )
    source.add_argument("--config", type=Path, help="key=value file")

    run_parser.add_argument("--out", type=Path, default=None)
    run_parser.add_argument("--ensemble", type=int, default=None)
    run_parser.add_argument(
        "--sampling", choices=("gaussian", "born"), default=None
    )
    run_parser.add_argument("--seed", type=int, default=None)
    run_parser.add_argument("--quadrature", type=int, default=None)
    run_parser.add_argument("--check-appendix", action="store_true")
    run_parser.add_argument("--refine", type=int, default=0)

    commands.add_parser("presets", help="list preset names")
    return parser


def scenario_from_args(args: argparse.Namespace) -> Scenario:
    overrides = {
        "ensemble_size": args.ensemble,
        "sampling_mode": args.sampling,
        "rng_seed": args.seed,
        "quadrature_order": args.quadrature,
    }
    overrides = {k: v for k, v in overrides.items() if v is not None}
    if args.config is not None:
        return load_scenario(args.config, overrides)
    return preset(args.preset, **overrides)


@exit_code_on_error
def run_command(args: argparse.Namespace) -> int:
    if args.refine < 0:
        raise ConfigError("--refine must be non-negative")
    scenario = scenario_from_args(args)
    out_dir = args.out or Path(settings.OUTPUT_DIR) / scenario.name

    report = run(
        scenario,
        RunOutputs(
            out_dir=out_dir,
            check_appendix=args.check_appendix,
            refine=args.refine,
        ),
    )

    print(
        f"{scenario.name}: {report.ledger.identity.equation}, "
        f"residual {report.ledger.residual:.3e}"
    )
    if len(report.residual_trend) > 1:
        trend = ", ".join(f"{r:.3e}" for r in report.residual_trend)
        print(f"residual trend: {trend}")
    if report.appendix_table is not None:
        print(report.appendix_table)
    return EXIT_OK


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "presets":
        print("\n".join(PRESET_NAMES))
        return EXIT_OK
    return run_command(args)


if __name__ == "__main__":
    sys.exit(main())
