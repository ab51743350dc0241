"""
Sweep Runner
============
Executes a RunConfig point by point and writes the records.

Sweep points run sequentially; Monte Carlo parallelism lives inside the
estimators. Output is written to a temporary file next to the target and
renamed into place, so readers never see a partial file.
"""

import json
import logging
import math
import os
import tempfile
from pathlib import Path
from typing import Any, Dict, List, Optional

import pandas as pd

from wiretap.asymptotic import ergodic_approx, outage_approx, secrecy_moments
from wiretap.channel.system import SystemConfig
from wiretap.cli.run_config import RunConfig
from wiretap.errors import NumericalError, WiretapError
from wiretap.montecarlo import TrialPlan, ergodic_from_rstar, outage_from_rstar, rstar_samples
from wiretap.optimization import (
    OptimizeResult,
    example1_fixed_point,
    example2_stationary,
    optimal_lt_grid,
)

logger = logging.getLogger(__name__)

COLUMNS = [
    'variable', 'value', 'eta', 'sigma',
    'r_erg_approx', 'r_erg_sim', 'sim_stderr',
    'p_out_approx', 'p_out_sim', 'outage_stderr',
]

OPTIMIZE_COLUMNS = [
    'variable', 'value', 'method', 'x_star', 'l_star',
    'objective', 'iterations', 'boundary', 'fallback',
]

Record = Dict[str, Any]


class SweepPointError(WiretapError):
    """A numerical failure at one sweep point."""

    def __init__(self, variable: str, value: Optional[float], cause: Exception):
        self.variable = variable
        self.value = value
        self.cause = cause
        where = "single point" if value is None else f"{variable}={value:g}"
        super().__init__(f"numerical failure at {where}: {type(cause).__name__}: {cause}")


def _point_overrides(variable: str, value: Optional[float]) -> Dict[str, Any]:
    if value is None:
        return {}
    if variable == 'l_t':
        return {'l_t': int(value)}
    return {variable: value}


def _evaluate_point(config: RunConfig, cfg: SystemConfig, n_workers: Optional[int]) -> Record:
    nan = float('nan')
    record: Record = {c: nan for c in COLUMNS[2:]}

    if config.mode in ('approx', 'compare'):
        moments = secrecy_moments(cfg)
        record['eta'] = moments.eta
        record['sigma'] = moments.sigma
        record['r_erg_approx'] = ergodic_approx(moments)
        if config.r_out is not None:
            record['p_out_approx'] = outage_approx(moments, config.r_out)

    if config.simulates:
        plan = TrialPlan(seed=config.seed, n_trials=config.trials, r_out=config.r_out)
        r_star = rstar_samples(cfg, plan, n_workers)
        ergodic = ergodic_from_rstar(r_star)
        record['r_erg_sim'] = ergodic.mean
        record['sim_stderr'] = ergodic.std_error
        if config.r_out is not None:
            outage = outage_from_rstar(r_star, config.r_out)
            record['p_out_sim'] = outage.mean
            record['outage_stderr'] = outage.std_error
    return record


def _optimize_point(config: RunConfig, cfg: SystemConfig) -> OptimizeResult:
    spec = config.optimizer
    if spec.method == 'example1_fixed_point':
        return example1_fixed_point(cfg.n_t, cfg.rho_m, cfg.rho_e)
    if spec.method == 'example2_stationary':
        return example2_stationary(cfg.n_t, cfg.n_e, cfg.rho_m, cfg.rho_e,
                                   variance_form=spec.variance_form)
    return optimal_lt_grid(cfg, spec.objective, r_out=config.r_out)


def run_records(config: RunConfig, n_workers: Optional[int] = None) -> List[Record]:
    """
    Evaluate every sweep point of config.

    Returns:
        One record per point, keyed by COLUMNS (or OPTIMIZE_COLUMNS for
        mode=optimize); inapplicable fields are NaN.

    Raises:
        SweepPointError: If a numerical procedure fails at a point.
    """
    records = []
    points = config.points()
    for index, (variable, value) in enumerate(points, start=1):
        overrides = _point_overrides(variable, value)
        if config.mode == 'optimize':
            overrides.setdefault('l_t', 1)
        cfg = config.scenario.to_system(**overrides)

        try:
            if config.mode == 'optimize':
                result = _optimize_point(config, cfg)
                record = {
                    'method': result.method.value,
                    'x_star': result.x_star,
                    'l_star': result.l_star,
                    'objective': result.objective_at_l_star,
                    'iterations': result.iterations,
                    'boundary': result.boundary,
                    'fallback': result.fallback,
                }
            else:
                record = _evaluate_point(config, cfg, n_workers)
        except NumericalError as exc:
            raise SweepPointError(variable, value, exc) from exc

        if value is None:
            shown: Any = float('nan')
        else:
            shown = int(value) if variable == 'l_t' else value
        records.append({'variable': variable, 'value': shown, **record})
        logger.info("Point %d/%d done (%s=%s)", index, len(points), variable,
                    '-' if value is None else f"{value:g}")
    return records


def records_frame(config: RunConfig, records: List[Record]) -> pd.DataFrame:
    """Records as a DataFrame with the mode's fixed column order."""
    columns = OPTIMIZE_COLUMNS if config.mode == 'optimize' else COLUMNS
    frame = pd.DataFrame(records, columns=columns)
    if config.sweep is not None and config.sweep.variable == 'l_t':
        frame['value'] = frame['value'].astype(int)
    return frame


def _json_ready(records: List[Record]) -> List[Record]:
    def clean(v: Any) -> Any:
        if isinstance(v, float) and math.isnan(v):
            return None
        return v
    return [{k: clean(v) for k, v in r.items()} for r in records]


def write_atomic(path: Path, payload: str) -> None:
    """Write payload to path through a temporary file in the same directory."""
    path = Path(path)
    directory = path.parent if str(path.parent) else Path('.')
    directory.mkdir(parents=True, exist_ok=True)
    fd, tmp_name = tempfile.mkstemp(prefix=f".{path.name}.", suffix='.tmp', dir=directory)
    try:
        with os.fdopen(fd, 'w', encoding='utf-8', newline='') as handle:
            handle.write(payload)
        os.replace(tmp_name, path)
    except BaseException:
        if os.path.exists(tmp_name):
            os.unlink(tmp_name)
        raise


def render(config: RunConfig, records: List[Record]) -> str:
    """
    Serialize records in the configured format.

    CSV uses CRLF line endings and leaves inapplicable fields empty; JSON is
    an array of objects with null for inapplicable fields.
    """
    if config.format == 'json':
        return json.dumps(_json_ready(records), indent=2) + '\n'
    return records_frame(config, records).to_csv(index=False, lineterminator='\r\n', na_rep='')


def run(config: RunConfig, n_workers: Optional[int] = None) -> pd.DataFrame:
    """
    Execute config and write its output file.

    Returns:
        The records as a DataFrame (for console summaries).
    """
    logger.info("Running mode=%s with %d point(s) -> %s",
                config.mode, len(config.points()), config.output_path)
    records = run_records(config, n_workers)
    write_atomic(config.output_path, render(config, records))
    logger.info("Wrote %d record(s) to %s", len(records), config.output_path)
    return records_frame(config, records)
