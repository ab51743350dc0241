"""
Channel Sampling
================
Counter-based random streams and Rayleigh fading matrices.

Every Monte Carlo trial owns the stream keyed by (seed, trial). The stream
is a Philox generator whose key is the seed and whose counter starts at the
trial index shifted into the top 64 bits, so streams of different trials
never overlap and no trial depends on how work is split among workers.
"""

import math

import numpy as np

from wiretap.channel.system import ComplexMatrix
from wiretap.errors import ConfigurationError

_SEED_MASK = (1 << 64) - 1
_HALF_SQRT = math.sqrt(0.5)


def rng_stream(seed: int, trial: int) -> np.random.Generator:
    """
    Independent generator for one trial.

    Args:
        seed: 64-bit seed (negative values are taken modulo 2^64).
        trial: Non-negative trial index.
    """
    if trial < 0 or trial >= (1 << 64):
        raise ConfigurationError(f"Trial index must lie in [0, 2^64), got {trial}")
    key = int(seed) & _SEED_MASK
    return np.random.Generator(np.random.Philox(key=key, counter=int(trial) << 192))


def sample_channel(rows: int, cols: int, stream: np.random.Generator) -> ComplexMatrix:
    """
    Draw an i.i.d. circularly-symmetric complex Gaussian matrix.

    Real and imaginary parts are independent with variance 1/2 each, so every
    entry has unit variance.
    """
    if rows < 1 or cols < 1:
        raise ConfigurationError(f"Channel dimensions must be >= 1, got {rows}x{cols}")
    draws = stream.standard_normal((rows, cols, 2))
    entries = (draws[..., 0] + 1j * draws[..., 1]) * _HALF_SQRT
    return ComplexMatrix(entries, provenance="rayleigh")
