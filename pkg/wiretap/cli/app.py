"""
Command-Line Entry Point
========================
`wiretap RUN_CONFIG.json [--seed N] [--trials N] [--output PATH]
[--format csv|json] [--threads N] [-v | -q]`

Exit status: 0 on success, 2 on an invalid run config, 3 on a numerical
failure at a sweep point.
"""

import argparse
import dataclasses
import logging
import sys
from pathlib import Path
from typing import List, Optional

from wiretap import __version__
from wiretap.cli.formatter import ResultsFormatter
from wiretap.cli.run_config import FORMATS, RunConfig, load_run_config
from wiretap.cli.runner import SweepPointError, run
from wiretap.errors import ConfigurationError, NumericalError

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_NUMERICAL = 3

LOG_FORMAT = '%(asctime)s [%(levelname)s] [%(name)s] %(message)s'


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='wiretap',
        description='Secrecy rate of massive MIMO wiretap channels under transmit antenna selection.',
    )
    parser.add_argument('config', type=Path, help='JSON run-config file')
    parser.add_argument('--seed', type=int, help='override the Monte Carlo seed')
    parser.add_argument('--trials', type=int, help='override the Monte Carlo trials per point')
    parser.add_argument('--output', type=Path, help='override the output path')
    parser.add_argument('--format', choices=FORMATS, help='override the output format')
    parser.add_argument('--threads', type=int, help='Monte Carlo workers (default: MIMOME_THREADS or CPU count)')
    verbosity = parser.add_mutually_exclusive_group()
    verbosity.add_argument('-v', '--verbose', action='store_true', help='debug logging')
    verbosity.add_argument('-q', '--quiet', action='store_true', help='warnings only, no summary')
    parser.add_argument('--version', action='version', version=f'%(prog)s {__version__}')
    return parser


def apply_overrides(config: RunConfig, args: argparse.Namespace) -> RunConfig:
    """Apply command-line overrides to a parsed config."""
    changes = {}
    if args.seed is not None:
        if args.seed < 0:
            raise ConfigurationError(f"--seed must be non-negative, got {args.seed}")
        changes['seed'] = args.seed
    if args.trials is not None:
        if args.trials < 1:
            raise ConfigurationError(f"--trials must be >= 1, got {args.trials}")
        changes['trials'] = args.trials
    if args.output is not None:
        changes['output_path'] = args.output
    if args.format is not None:
        changes['format'] = args.format
    return dataclasses.replace(config, **changes) if changes else config


def main(argv: Optional[List[str]] = None) -> int:
    """Run the CLI and return its exit status."""
    args = build_parser().parse_args(argv)

    level = logging.DEBUG if args.verbose else logging.WARNING if args.quiet else logging.INFO
    logging.basicConfig(level=level, format=LOG_FORMAT)

    try:
        config = apply_overrides(load_run_config(args.config), args)
        if args.threads is not None and args.threads < 1:
            raise ConfigurationError(f"--threads must be >= 1, got {args.threads}")
    except ConfigurationError as exc:
        print(f"{args.config}: {exc}", file=sys.stderr)
        return EXIT_CONFIG

    if not args.quiet:
        ResultsFormatter.print_run_header(config)

    try:
        frame = run(config, n_workers=args.threads)
    except SweepPointError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    except NumericalError as exc:
        print(f"error: numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    except ConfigurationError as exc:
        print(f"{args.config}: {exc}", file=sys.stderr)
        return EXIT_CONFIG

    if not args.quiet:
        ResultsFormatter.print_sweep_table(frame)
        print(f"Output written to {config.output_path}")
    return EXIT_OK


if __name__ == '__main__':
    sys.exit(main())
