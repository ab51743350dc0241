"""
Channel Module
==============
Exact finite-dimensional model of the MIMOME wiretap channel.

- SystemConfig: antenna counts, selection size and linear SNRs
- sample_channel: i.i.d. unit-variance Rayleigh fading matrices
- order_and_select / effective_channel: the norm-based selection protocol
- logdet_rate / secrecy_sample: instantaneous rates in bits

Usage:
    from wiretap.channel import SystemConfig, rng_stream, secrecy_sample

    cfg = SystemConfig(n_t=128, n_r=1, n_e=1, l_t=18, rho_m=1.0, rho_e=0.1)
    sample = secrecy_sample(cfg, rng_stream(seed=7, trial=0))
    print(sample.r_s)
"""

from wiretap.channel.system import (
    SystemConfig,
    ComplexMatrix,
    SelectionSet,
    SecrecySample,
)
from wiretap.channel.sampling import rng_stream, sample_channel
from wiretap.channel.selection import order_and_select, effective_channel, selection_gain
from wiretap.channel.rates import logdet_rate, secrecy_sample

__all__ = [
    'SystemConfig',
    'ComplexMatrix',
    'SelectionSet',
    'SecrecySample',
    'rng_stream',
    'sample_channel',
    'order_and_select',
    'effective_channel',
    'selection_gain',
    'logdet_rate',
    'secrecy_sample',
]
