"""
Run Configuration
=================
Parsing and validation of the JSON run-config document.

SNRs are given in dB here and converted to linear values when a
SystemConfig is built. Validation errors carry the line of the offending
key so the CLI can report `line N: ...`.

See docs/run-config-schema.md for the full schema.
"""

from __future__ import annotations

import json
import math
import re
from dataclasses import dataclass, replace
from pathlib import Path
from typing import Any, List, Optional, Tuple

from wiretap.channel.system import SystemConfig
from wiretap.config.defaults import DEFAULT_SEED, DEFAULT_TRIALS
from wiretap.config.units import db_to_linear
from wiretap.errors import ConfigurationError

MODES = ('simulate', 'approx', 'optimize', 'compare')
FORMATS = ('csv', 'json')
SWEEP_VARIABLES = ('l_t', 'rho_m_db', 'rho_e_db')
OPTIMIZE_METHODS = ('grid', 'example1_fixed_point', 'example2_stationary')
OBJECTIVES = ('ergodic', 'outage')

# Decimals kept when generating dB ranges, so 0.1-step ranges land on the grid
_RANGE_DECIMALS = 12


class RunConfigError(ConfigurationError):
    """Run-config validation error, optionally tied to a line of the file."""

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


@dataclass(frozen=True)
class ScenarioSpec:
    """Antenna counts and SNRs (dB) of the scenario block."""
    n_t: int
    n_r: int
    n_e: int
    rho_m_db: float
    rho_e_db: float
    l_t: Optional[int] = None

    def to_system(self, **overrides: Any) -> SystemConfig:
        """
        Build the linear-SNR SystemConfig, applying sweep overrides
        (l_t, rho_m_db or rho_e_db).
        """
        spec = replace(self, **overrides)
        if spec.l_t is None:
            raise ConfigurationError("scenario.l_t is required for this run")
        return SystemConfig(
            n_t=spec.n_t,
            n_r=spec.n_r,
            n_e=spec.n_e,
            l_t=spec.l_t,
            rho_m=db_to_linear(spec.rho_m_db),
            rho_e=db_to_linear(spec.rho_e_db),
        )


@dataclass(frozen=True)
class SweepSpec:
    """Sweep variable with its (already expanded) values."""
    variable: str
    values: Tuple[float, ...]


@dataclass(frozen=True)
class OptimizeSpec:
    """Optimizer selection for mode=optimize."""
    method: str = 'grid'
    objective: str = 'ergodic'
    variance_form: str = 'exact'


@dataclass(frozen=True)
class RunConfig:
    """
    A validated run configuration.

    Attributes:
        scenario: Antenna counts and dB SNRs.
        mode: 'simulate', 'approx', 'optimize' or 'compare'.
        sweep: Optional sweep; None runs a single point.
        trials: Monte Carlo trials per point.
        seed: Monte Carlo base seed.
        r_out: Outage threshold in bits; enables the outage columns.
        output_path: Destination file.
        format: 'csv' or 'json'.
        optimizer: Optimizer settings (mode=optimize only).
    """
    scenario: ScenarioSpec
    mode: str
    output_path: Path
    sweep: Optional[SweepSpec] = None
    trials: int = DEFAULT_TRIALS
    seed: int = DEFAULT_SEED
    r_out: Optional[float] = None
    format: str = 'csv'
    optimizer: OptimizeSpec = OptimizeSpec()

    @property
    def simulates(self) -> bool:
        return self.mode in ('simulate', 'compare')

    def points(self) -> List[Tuple[str, Optional[float]]]:
        """(variable, value) per sweep point; a single ('none', None) without a sweep."""
        if self.sweep is None:
            return [('none', None)]
        return [(self.sweep.variable, v) for v in self.sweep.values]


# ====================================
# Parsing helpers
# ====================================

def _line_of(text: str, key: str) -> Optional[int]:
    """1-based line of the first occurrence of "key": in text."""
    match = re.search(r'"%s"\s*:' % re.escape(key), text)
    if match is None:
        return None
    return text.count('\n', 0, match.start()) + 1


class _Reader:
    """Typed field access that reports errors at the key's line."""

    def __init__(self, text: str):
        self.text = text

    def fail(self, key: str, message: str) -> RunConfigError:
        return RunConfigError(message, _line_of(self.text, key))

    def integer(self, block: dict, key: str, prefix: str, minimum: int = 1,
                required: bool = True, default: Optional[int] = None) -> Optional[int]:
        if key not in block:
            if required:
                raise RunConfigError(f"missing required field '{prefix}{key}'",
                                     _line_of(self.text, prefix.rstrip('.')) if prefix else None)
            return default
        value = block[key]
        if isinstance(value, bool) or not isinstance(value, int):
            raise self.fail(key, f"'{prefix}{key}' must be an integer, got {value!r}")
        if value < minimum:
            raise self.fail(key, f"'{prefix}{key}' must be >= {minimum}, got {value}")
        return value

    def number(self, block: dict, key: str, prefix: str, required: bool = True) -> Optional[float]:
        if key not in block:
            if required:
                raise RunConfigError(f"missing required field '{prefix}{key}'",
                                     _line_of(self.text, prefix.rstrip('.')) if prefix else None)
            return None
        value = block[key]
        if isinstance(value, bool) or not isinstance(value, (int, float)) or not math.isfinite(value):
            raise self.fail(key, f"'{prefix}{key}' must be a finite number, got {value!r}")
        return float(value)

    def choice(self, block: dict, key: str, options: Tuple[str, ...], default: str) -> str:
        value = block.get(key, default)
        if value not in options:
            raise self.fail(key, f"'{key}' must be one of {', '.join(options)}, got {value!r}")
        return value


def _expand_range(reader: _Reader, sweep: dict, variable: str) -> Tuple[float, ...]:
    start = reader.number(sweep, 'start', 'sweep.')
    stop = reader.number(sweep, 'stop', 'sweep.')
    step = reader.number(sweep, 'step', 'sweep.')
    if step <= 0:
        raise reader.fail('step', f"'sweep.step' must be positive, got {step}")
    if stop < start:
        raise reader.fail('stop', f"'sweep.stop' ({stop}) is below 'sweep.start' ({start})")
    if variable == 'l_t':
        for key, bound in (('start', start), ('stop', stop), ('step', step)):
            if bound != int(bound):
                raise reader.fail(key, f"'sweep.{key}' must be an integer for an l_t sweep, got {bound:g}")
        return tuple(float(v) for v in range(int(start), int(stop) + 1, int(step)))
    count = int(math.floor((stop - start) / step + 1e-9)) + 1
    return tuple(round(start + k * step, _RANGE_DECIMALS) for k in range(count))


def _parse_sweep(reader: _Reader, raw: Any, scenario: ScenarioSpec) -> SweepSpec:
    if not isinstance(raw, dict):
        raise reader.fail('sweep', "'sweep' must be an object")
    variable = raw.get('variable')
    if variable not in SWEEP_VARIABLES:
        raise reader.fail('variable' if 'variable' in raw else 'sweep',
                          f"'sweep.variable' must be one of {', '.join(SWEEP_VARIABLES)}, got {variable!r}")

    if 'values' in raw:
        values = raw['values']
        if not isinstance(values, list) or not values:
            raise reader.fail('values', "'sweep.values' must be a non-empty list")
        for v in values:
            if isinstance(v, bool) or not isinstance(v, (int, float)) or not math.isfinite(v):
                raise reader.fail('values', f"sweep value {v!r} is not a finite number")
        values = tuple(float(v) for v in values)
    elif 'start' in raw:
        values = _expand_range(reader, raw, variable)
    else:
        raise reader.fail('sweep', "'sweep' needs either 'values' or 'start'/'stop'/'step'")

    if variable == 'l_t':
        key = 'values' if 'values' in raw else 'start'
        for v in values:
            if v != int(v) or not 1 <= v <= scenario.n_t:
                raise reader.fail(key, f"l_t sweep value {v:g} must be an integer in [1, {scenario.n_t}]")
    return SweepSpec(variable=variable, values=values)


def parse_run_config(text: str, base_dir: Optional[Path] = None) -> RunConfig:
    """
    Parse and validate a run-config JSON document.

    Args:
        text: JSON document.
        base_dir: Directory relative output paths are resolved against
                  (the current directory when None).

    Raises:
        RunConfigError: On malformed JSON or invalid fields.
    """
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise RunConfigError(f"invalid JSON: {exc.msg}", exc.lineno) from None
    if not isinstance(raw, dict):
        raise RunConfigError("run config must be a JSON object", 1)

    reader = _Reader(text)
    unknown = sorted(set(raw) - {'scenario', 'mode', 'sweep', 'trials', 'seed', 'r_out',
                                 'output', 'format', 'optimizer'})
    if unknown:
        raise reader.fail(unknown[0], f"unknown field '{unknown[0]}'")

    block = raw.get('scenario')
    if not isinstance(block, dict):
        raise reader.fail('scenario', "'scenario' must be an object")
    scenario = ScenarioSpec(
        n_t=reader.integer(block, 'n_t', 'scenario.'),
        n_r=reader.integer(block, 'n_r', 'scenario.'),
        n_e=reader.integer(block, 'n_e', 'scenario.'),
        rho_m_db=reader.number(block, 'rho_m_db', 'scenario.'),
        rho_e_db=reader.number(block, 'rho_e_db', 'scenario.'),
        l_t=reader.integer(block, 'l_t', 'scenario.', required=False),
    )
    for key in ('rho_m_db', 'rho_e_db'):
        try:
            db_to_linear(getattr(scenario, key))
        except ConfigurationError as exc:
            raise reader.fail(key, f"'scenario.{key}': {exc}") from None
    if scenario.l_t is not None and scenario.l_t > scenario.n_t:
        raise reader.fail('l_t', f"'scenario.l_t' ({scenario.l_t}) exceeds n_t ({scenario.n_t})")

    if 'mode' not in raw:
        raise RunConfigError("missing required field 'mode'")
    mode = reader.choice(raw, 'mode', MODES, default='')
    sweep = _parse_sweep(reader, raw['sweep'], scenario) if raw.get('sweep') is not None else None

    trials = reader.integer(raw, 'trials', '', required=False, default=DEFAULT_TRIALS)
    seed = reader.integer(raw, 'seed', '', minimum=0, required=False, default=DEFAULT_SEED)
    r_out = reader.number(raw, 'r_out', '', required=False)
    if r_out is not None and r_out < 0:
        raise reader.fail('r_out', f"'r_out' must be non-negative, got {r_out}")
    fmt = reader.choice(raw, 'format', FORMATS, default='csv')

    output = raw.get('output', f"results.{fmt}")
    if not isinstance(output, str) or not output:
        raise reader.fail('output', "'output' must be a non-empty path string")
    output_path = Path(output)
    if base_dir is not None and not output_path.is_absolute():
        output_path = base_dir / output_path

    opt_block = raw.get('optimizer', {})
    if not isinstance(opt_block, dict):
        raise reader.fail('optimizer', "'optimizer' must be an object")
    optimizer = OptimizeSpec(
        method=reader.choice(opt_block, 'method', OPTIMIZE_METHODS, default='grid'),
        objective=reader.choice(opt_block, 'objective', OBJECTIVES, default='ergodic'),
        variance_form=reader.choice(opt_block, 'variance_form', ('exact', 'printed'), default='exact'),
    )

    config = RunConfig(
        scenario=scenario,
        mode=mode,
        output_path=output_path,
        sweep=sweep,
        trials=trials,
        seed=seed,
        r_out=r_out,
        format=fmt,
        optimizer=optimizer,
    )
    _check_consistency(reader, config)
    return config


def _check_consistency(reader: _Reader, config: RunConfig) -> None:
    scenario = config.scenario
    sweeps_lt = config.sweep is not None and config.sweep.variable == 'l_t'

    if config.mode == 'optimize':
        if sweeps_lt:
            raise reader.fail('variable', "mode 'optimize' chooses l_t itself; sweep rho_m_db or rho_e_db")
        method = config.optimizer.method
        if method == 'example1_fixed_point' and (scenario.n_r != 1 or scenario.n_e != 1):
            raise reader.fail('method', "example1_fixed_point requires n_r = n_e = 1")
        if method == 'example2_stationary' and scenario.n_r != 1:
            raise reader.fail('method', "example2_stationary requires n_r = 1")
        if config.optimizer.objective == 'outage' and method != 'grid':
            raise reader.fail('objective', "the outage objective is only available with method 'grid'")
        if config.optimizer.objective == 'outage' and config.r_out is None:
            raise reader.fail('objective', "the outage objective requires 'r_out'")
    elif scenario.l_t is None and not sweeps_lt:
        raise reader.fail('scenario', "'scenario.l_t' is required unless l_t is swept")


def load_run_config(path: Path) -> RunConfig:
    """Read and validate a UTF-8 run-config file."""
    path = Path(path)
    try:
        text = path.read_text(encoding='utf-8')
    except OSError as exc:
        raise RunConfigError(f"cannot read run config {path}: {exc.strerror}") from None
    return parse_run_config(text)
