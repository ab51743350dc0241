"""
Monte Carlo Harness
===================
Chunked evaluation of per-trial secrecy samples.

Trials [0, n_trials) are cut into fixed chunks of DEFAULT_CHUNK_TRIALS.
Chunks run on a joblib thread pool and are concatenated in trial order,
so the sample array (and everything reduced from it) does not depend on
the number of workers. The per-trial loop is Python code that holds the
GIL outside the LAPACK calls, so threads give only a modest speedup.
"""

import logging
from typing import Callable, List, Optional, Tuple

import numpy as np
from joblib import Parallel, delayed

from wiretap.channel import SystemConfig, rng_stream, secrecy_sample
from wiretap.config.defaults import DEFAULT_CHUNK_TRIALS
from wiretap.config.runtime import worker_count
from wiretap.errors import MissingThreshold
from wiretap.montecarlo.plan import Estimate, TrialPlan

logger = logging.getLogger(__name__)

ChunkFn = Callable[[int, int], np.ndarray]


def _chunk_bounds(n_trials: int, chunk: int = DEFAULT_CHUNK_TRIALS) -> List[Tuple[int, int]]:
    return [(start, min(start + chunk, n_trials)) for start in range(0, n_trials, chunk)]


def run_chunked(fn: ChunkFn, n_trials: int, n_workers: Optional[int] = None) -> np.ndarray:
    """
    Evaluate fn(start, stop) over the fixed chunk partition and stack the
    results in trial order.
    """
    bounds = _chunk_bounds(n_trials)
    workers = min(worker_count(n_workers), len(bounds))
    logger.debug("Running %d trials in %d chunks on %d worker(s)", n_trials, len(bounds), workers)

    if workers == 1:
        parts = [fn(start, stop) for start, stop in bounds]
    else:
        parts = Parallel(n_jobs=workers, prefer='threads')(
            delayed(fn)(start, stop) for start, stop in bounds
        )
    return np.concatenate(parts, axis=0)


def rate_samples(cfg: SystemConfig, plan: TrialPlan, n_workers: Optional[int] = None) -> np.ndarray:
    """
    Per-trial rates as an (n_trials, 2) array of [R_m, R_e] in trial order.
    """
    def chunk(start: int, stop: int) -> np.ndarray:
        out = np.empty((stop - start, 2))
        for i, trial in enumerate(range(start, stop)):
            sample = secrecy_sample(cfg, rng_stream(plan.seed, trial), mirror_main=plan.mirror_main)
            out[i, 0] = sample.r_m
            out[i, 1] = sample.r_e
        return out

    return run_chunked(chunk, plan.n_trials, n_workers)


def rstar_samples(cfg: SystemConfig, plan: TrialPlan, n_workers: Optional[int] = None) -> np.ndarray:
    """Unclipped secrecy rates R_m - R_e per trial."""
    rates = rate_samples(cfg, plan, n_workers)
    return rates[:, 0] - rates[:, 1]


def ergodic_from_rstar(r_star: np.ndarray) -> Estimate:
    """Ergodic estimate from already simulated R* samples."""
    return Estimate.from_samples(np.maximum(0.0, r_star))


def outage_from_rstar(r_star: np.ndarray, r_out: Optional[float]) -> Estimate:
    """
    Outage estimate from already simulated R* samples.

    Raises:
        MissingThreshold: If r_out is None.
    """
    if r_out is None:
        raise MissingThreshold("Outage estimate requires plan.r_out")
    return Estimate.from_indicators(np.maximum(0.0, r_star) < r_out)


def estimate_ergodic(cfg: SystemConfig, plan: TrialPlan, n_workers: Optional[int] = None) -> Estimate:
    """Sample mean of the clipped secrecy rate [R_m - R_e]^+."""
    return ergodic_from_rstar(rstar_samples(cfg, plan, n_workers))


def estimate_outage(cfg: SystemConfig, plan: TrialPlan, n_workers: Optional[int] = None) -> Estimate:
    """
    Fraction of trials with secrecy rate strictly below plan.r_out.

    Raises:
        MissingThreshold: If plan.r_out is None.
    """
    if plan.r_out is None:
        raise MissingThreshold("Outage estimate requires plan.r_out")
    return outage_from_rstar(rstar_samples(cfg, plan, n_workers), plan.r_out)


def empirical_rstar_moments(
    cfg: SystemConfig,
    plan: TrialPlan,
    n_workers: Optional[int] = None
) -> Tuple[float, float]:
    """Sample mean and standard deviation (ddof=1) of R*."""
    r_star = rstar_samples(cfg, plan, n_workers)
    std = float(r_star.std(ddof=1)) if r_star.size > 1 else 0.0
    return float(r_star.mean()), std
