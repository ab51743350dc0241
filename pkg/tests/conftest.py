"""
Pytest configuration and shared fixtures for wiretap tests.
"""

import json
from pathlib import Path
from typing import Callable

import numpy as np
import pytest

from wiretap.channel import SystemConfig
from wiretap.config.units import db_to_linear


@pytest.fixture
def rng() -> np.random.Generator:
    """Seeded generator for tests that need arbitrary random inputs."""
    return np.random.default_rng(20180101)


@pytest.fixture
def example1_params() -> dict:
    """n_t=128, n_r=n_e=1, rho_m=0 dB, rho_e=-10 dB."""
    return {'n_t': 128, 'rho_m': db_to_linear(0.0), 'rho_e': db_to_linear(-10.0)}


@pytest.fixture
def example2_params() -> dict:
    """n_t=128, n_r=1, n_e=16, rho_m=0 dB, rho_e=-25 dB."""
    return {'n_t': 128, 'n_e': 16, 'rho_m': db_to_linear(0.0), 'rho_e': db_to_linear(-25.0)}


@pytest.fixture
def small_config() -> SystemConfig:
    """Small multi-antenna scenario used across the channel and harness tests."""
    return SystemConfig(n_t=16, n_r=2, n_e=2, l_t=8, rho_m=1.0, rho_e=db_to_linear(-5.0))


@pytest.fixture
def massive_config() -> SystemConfig:
    """n_t=128, l_t=16, n_r=n_e=2, rho_m=0 dB, rho_e=-10 dB."""
    return SystemConfig(n_t=128, n_r=2, n_e=2, l_t=16, rho_m=1.0, rho_e=0.1)


@pytest.fixture
def write_run_config(tmp_path: Path) -> Callable[..., Path]:
    """
    Factory writing a run-config JSON file into tmp_path.

    The output path defaults to a file inside tmp_path.

    Returns:
        Callable(document, name='run.json', raw=None) -> Path of the config.
    """
    def _write(document: dict = None, name: str = 'run.json', raw: str = None) -> Path:
        path = tmp_path / name
        if raw is not None:
            path.write_text(raw, encoding='utf-8')
            return path
        document = dict(document)
        document.setdefault('output', str(tmp_path / 'out.csv'))
        path.write_text(json.dumps(document, indent=2), encoding='utf-8')
        return path
    return _write
