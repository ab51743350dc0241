"""
CLI Module
==========
JSON-driven command-line front end: single points, sweeps over l_t or the
SNRs, Monte Carlo / asymptotic comparisons and antenna-count optimization.

Usage:
    wiretap configs/compare_vs_lt.json --threads 8
    python -m wiretap configs/example1_optimize.json --format json
"""

from wiretap.cli.run_config import (
    RunConfig,
    RunConfigError,
    ScenarioSpec,
    SweepSpec,
    OptimizeSpec,
    parse_run_config,
    load_run_config,
)
from wiretap.cli.runner import (
    COLUMNS,
    OPTIMIZE_COLUMNS,
    SweepPointError,
    render,
    run,
    run_records,
    write_atomic,
)
from wiretap.cli.formatter import ResultsFormatter
from wiretap.cli.app import main, build_parser

__all__ = [
    'RunConfig',
    'RunConfigError',
    'ScenarioSpec',
    'SweepSpec',
    'OptimizeSpec',
    'parse_run_config',
    'load_run_config',
    'COLUMNS',
    'OPTIMIZE_COLUMNS',
    'SweepPointError',
    'render',
    'run',
    'run_records',
    'write_atomic',
    'ResultsFormatter',
    'main',
    'build_parser',
]
