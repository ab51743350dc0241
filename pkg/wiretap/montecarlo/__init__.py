"""
Monte Carlo Module
==================
Seeded, order-independent Monte Carlo estimates of the ergodic secrecy
rate and the secrecy outage probability.

Every trial owns a counter-based random stream derived from (seed, trial),
and trials are processed in fixed chunks that are reduced in trial order,
so estimates are bit-identical for any number of workers.
"""

from wiretap.montecarlo.plan import TrialPlan, Estimate
from wiretap.montecarlo.harness import (
    rate_samples,
    rstar_samples,
    estimate_ergodic,
    estimate_outage,
    ergodic_from_rstar,
    outage_from_rstar,
    empirical_rstar_moments,
)
from wiretap.montecarlo.diagnostics import (
    NormalityResult,
    empirical_selection_gain,
    gaussianity_test,
)

__all__ = [
    'TrialPlan',
    'Estimate',
    'rate_samples',
    'rstar_samples',
    'estimate_ergodic',
    'estimate_outage',
    'ergodic_from_rstar',
    'outage_from_rstar',
    'empirical_rstar_moments',
    'NormalityResult',
    'empirical_selection_gain',
    'gaussianity_test',
]
