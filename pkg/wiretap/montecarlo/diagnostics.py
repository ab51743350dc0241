"""
Monte Carlo Diagnostics
=======================
Checks of the large-system approximation against simulation: moments of
the selection gain and normality of the unclipped secrecy rate.
"""

from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np
from scipy import stats

from wiretap.channel import SystemConfig, order_and_select, rng_stream, sample_channel, selection_gain
from wiretap.montecarlo.harness import rstar_samples, run_chunked
from wiretap.montecarlo.plan import TrialPlan


@dataclass(frozen=True)
class NormalityResult:
    """
    Jarque-Bera test of R* samples.

    Attributes:
        statistic: Jarque-Bera statistic.
        p_value: Asymptotic p-value.
        skewness: Sample skewness.
        excess_kurtosis: Sample excess kurtosis (0 for a Gaussian).
    """
    statistic: float
    p_value: float
    skewness: float
    excess_kurtosis: float


def empirical_selection_gain(
    cfg: SystemConfig,
    plan: TrialPlan,
    n_workers: Optional[int] = None
) -> Tuple[float, float]:
    """
    Sample mean and variance (ddof=1) of the selection gain.

    Uses the same per-trial streams as the rate estimators, so trial t sees
    the same H_m here and in estimate_ergodic.
    """
    def chunk(start: int, stop: int) -> np.ndarray:
        gains = np.empty(stop - start)
        for i, trial in enumerate(range(start, stop)):
            h_m = sample_channel(cfg.n_r, cfg.n_t, rng_stream(plan.seed, trial))
            gains[i] = selection_gain(h_m, order_and_select(h_m, cfg.l_t))
        return gains

    gains = run_chunked(chunk, plan.n_trials, n_workers)
    var = float(gains.var(ddof=1)) if gains.size > 1 else 0.0
    return float(gains.mean()), var


def gaussianity_test(
    cfg: SystemConfig,
    plan: TrialPlan,
    n_workers: Optional[int] = None
) -> NormalityResult:
    """Jarque-Bera normality test on simulated R* samples."""
    r_star = rstar_samples(cfg, plan, n_workers)
    jb = stats.jarque_bera(r_star)
    return NormalityResult(
        statistic=float(jb.statistic),
        p_value=float(jb.pvalue),
        skewness=float(stats.skew(r_star)),
        excess_kurtosis=float(stats.kurtosis(r_star)),
    )
