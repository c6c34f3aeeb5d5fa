"""
Command-line entry point.

    polygrpd <command> [scenario.cfg] [--config PATH] [--out DIR] [--seed N]
             [--samples K] [--grid N] [--tolerance-scale F] [-v]

Exit codes: 0 when every check passes, 1 when a check fails, 2 for invalid
configuration.
"""
import argparse
import logging
import sys
from typing import List, Optional

from ..utils import exceptions
from .commands import run
from .config import Command, ScenarioConfig, load_config, validate
from .info import SysInfo

log = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CHECK_FAILURE = 1
EXIT_CONFIG_ERROR = 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog='polygrpd', description='Poly-Poisson structures and their integration.')
    parser.add_argument('command', choices=Command.all(), help='Suite to run')
    parser.add_argument('scenario_file', nargs='?', default=None, help='Scenario file (.cfg)')
    parser.add_argument('--config', default=None, help='Scenario file, same as the positional argument')
    parser.add_argument('--out', default=None, help='Directory for report.json, residuals.csv and plot data')
    parser.add_argument('--seed', type=int, default=None, help='Seed of the random generator (u64)')
    parser.add_argument('--samples', type=int, default=None, help='Sample points or random draws')
    parser.add_argument('--grid', type=int, default=None, help='Grid steps N of cotangent paths')
    parser.add_argument('--tolerance-scale', type=float, default=None, help='Multiply every tolerance')
    parser.add_argument('--scenario', default=None,
                        help='Built-in scenario for reduce, foliation, morita and relational')
    parser.add_argument('-v', '--verbose', action='count', default=0, help='More logging, repeatable')
    return parser


def configure_logging(verbosity: int):
    level = logging.WARNING
    if verbosity == 1:
        level = logging.INFO
    elif verbosity > 1:
        level = logging.DEBUG
    logging.basicConfig(level=level, format='%(asctime)s %(levelname)s %(name)s: %(message)s')


def resolve_config(args: argparse.Namespace) -> ScenarioConfig:
    """
    Scenario file (if any) overridden by flags

    :raise ConfigError:
    """
    if args.scenario_file and args.config and args.scenario_file != args.config:
        raise exceptions.ConfigError('Scenario file given twice with different paths')
    source = args.config or args.scenario_file
    if source is None:
        config = ScenarioConfig(command=args.command)
    else:
        config = load_config(source)
        if config.command != args.command:
            raise exceptions.ConfigError(f"Scenario file is for {config.command!r}, not {args.command!r}")
    config = config.override(seed=args.seed, samples=args.samples, grid=args.grid,
                             tolerance_scale=args.tolerance_scale, scenario=args.scenario, out=args.out)
    return validate(config)


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    configure_logging(args.verbose)

    if args.command == Command.INFO:
        print(SysInfo())
        return EXIT_OK

    try:
        config = resolve_config(args)
        report = run(config, config.out)
    except exceptions.ConfigError as e:
        log.error("%s", e)
        print(f"[error] {e}", file=sys.stderr)
        return EXIT_CONFIG_ERROR

    print(report.summary())
    if not report.passed:
        failure = exceptions.CheckFailure(
            f"{len(report.failed())} check(s) failed: {', '.join(check.name for check in report.failed())}",
            report,
        )
        log.error("%s", failure)
        return EXIT_CHECK_FAILURE
    return EXIT_OK
