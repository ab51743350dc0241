"""
Trial Plans and Estimates
=========================
"""

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from wiretap.config.defaults import CI95_Z
from wiretap.errors import ConfigurationError


@dataclass(frozen=True)
class TrialPlan:
    """
    What to simulate.

    Attributes:
        seed: Base seed; trial t uses the stream derived from (seed, t).
        n_trials: Number of independent channel realizations.
        r_out: Outage threshold in bits (required for outage estimates).
        mirror_main: Reuse the main channel as the eavesdropper channel.
    """
    seed: int
    n_trials: int
    r_out: Optional[float] = None
    mirror_main: bool = False

    def __post_init__(self):
        if isinstance(self.seed, bool) or not isinstance(self.seed, (int, np.integer)):
            raise ConfigurationError(f"seed must be an integer, got {self.seed!r}")
        if self.seed < 0:
            raise ConfigurationError(f"seed must be non-negative, got {self.seed}")
        if isinstance(self.n_trials, bool) or not isinstance(self.n_trials, (int, np.integer)):
            raise ConfigurationError(f"n_trials must be an integer, got {self.n_trials!r}")
        if self.n_trials < 1:
            raise ConfigurationError(f"n_trials must be >= 1, got {self.n_trials}")
        if self.r_out is not None and (not self.r_out >= 0 or math.isinf(self.r_out)):
            raise ConfigurationError(f"r_out must be a finite non-negative rate, got {self.r_out}")


@dataclass(frozen=True)
class Estimate:
    """
    Sample mean with its standard error and 95% confidence half-width.

    Attributes:
        mean: Sample mean.
        std_error: Standard error of the mean.
        n_trials: Number of samples.
        ci95_halfwidth: CI95_Z * std_error.
    """
    mean: float
    std_error: float
    n_trials: int
    ci95_halfwidth: float

    def __post_init__(self):
        if self.std_error < 0:
            raise ValueError(f"std_error must be non-negative, got {self.std_error}")
        if self.n_trials < 1:
            raise ValueError(f"n_trials must be >= 1, got {self.n_trials}")

    @classmethod
    def from_samples(cls, samples: np.ndarray) -> 'Estimate':
        """Mean and standard error (ddof=1) of real-valued samples."""
        samples = np.asarray(samples, dtype=float)
        n = samples.size
        mean = float(samples.mean())
        std_error = float(samples.std(ddof=1) / math.sqrt(n)) if n > 1 else 0.0
        return cls(mean=mean, std_error=std_error, n_trials=n, ci95_halfwidth=CI95_Z * std_error)

    @classmethod
    def from_indicators(cls, indicators: np.ndarray) -> 'Estimate':
        """Proportion of True indicators with the binomial standard error."""
        indicators = np.asarray(indicators, dtype=bool)
        n = indicators.size
        p = float(indicators.mean())
        std_error = math.sqrt(p * (1.0 - p) / n)
        return cls(mean=p, std_error=std_error, n_trials=n, ci95_halfwidth=CI95_Z * std_error)
