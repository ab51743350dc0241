"""
Runtime Settings
================
Resolution of the Monte Carlo worker count.
"""

import os
from typing import Optional

from wiretap.config.defaults import THREADS_ENV_VAR
from wiretap.errors import ConfigurationError


def worker_count(requested: Optional[int] = None) -> int:
    """
    Number of workers the Monte Carlo harness may use.

    Args:
        requested: Explicit worker count. When None, the MIMOME_THREADS
                   environment variable is consulted, then the machine's
                   CPU count.

    Returns:
        A positive worker count.
    """
    if requested is not None:
        if requested < 1:
            raise ConfigurationError(f"Worker count must be >= 1, got {requested}")
        return int(requested)

    raw = os.environ.get(THREADS_ENV_VAR)
    if raw is not None and raw.strip():
        try:
            value = int(raw)
        except ValueError:
            raise ConfigurationError(f"{THREADS_ENV_VAR} must be an integer, got {raw!r}") from None
        if value < 1:
            raise ConfigurationError(f"{THREADS_ENV_VAR} must be >= 1, got {value}")
        return value

    return os.cpu_count() or 1
