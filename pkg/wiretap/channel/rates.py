"""
Instantaneous Rates
===================
Log-determinant rates of the effective channels and the secrecy rate of one
channel realization.
"""

import math

import numpy as np

from wiretap.channel.sampling import sample_channel
from wiretap.channel.selection import effective_channel, order_and_select
from wiretap.channel.system import ComplexMatrix, SecrecySample, SystemConfig
from wiretap.errors import ConfigurationError, DomainError, NumericalFailure

_LN2 = math.log(2.0)


def logdet_rate(h_eff: ComplexMatrix, rho: float) -> float:
    """
    Rate log2 det(I + rho * G) in bits.

    G is the Gram matrix on the smaller dimension of h_eff, so the cost is
    min(rows, cols)^3. The determinant comes from a Cholesky factor.

    Raises:
        DomainError: If rho is not positive.
        NumericalFailure: If the factorization meets a non-positive pivot.
    """
    if not rho > 0:
        raise DomainError(f"SNR must be positive, got {rho}")
    h = h_eff.entries
    if h.shape[1] <= h.shape[0]:
        gram = h.conj().T @ h
    else:
        gram = h @ h.conj().T
    a = np.eye(gram.shape[0]) + rho * gram
    try:
        factor = np.linalg.cholesky(a)
    except np.linalg.LinAlgError as exc:
        raise NumericalFailure(f"Cholesky factorization of I + rho*G failed: {exc}") from exc
    value = 2.0 * float(np.sum(np.log(factor.diagonal().real))) / _LN2
    # I + rho*G >= I, so only rounding can push this below zero
    return max(0.0, value)


def secrecy_sample(
    cfg: SystemConfig,
    stream: np.random.Generator,
    *,
    mirror_main: bool = False,
) -> SecrecySample:
    """
    Draw one realization and compute its rates.

    H_m (n_r x n_t) is drawn first, then H_e (n_e x n_t) from the same stream.
    Selection looks at H_m only.

    Args:
        cfg: Scenario configuration.
        stream: Random stream owned by this trial.
        mirror_main: Use H_e = H_m instead of an independent draw. Requires
                     n_e == n_r; used to check the identical-channel case.
    """
    h_m = sample_channel(cfg.n_r, cfg.n_t, stream)
    if mirror_main:
        if cfg.n_e != cfg.n_r:
            raise ConfigurationError(
                f"mirror_main requires n_e == n_r, got n_e={cfg.n_e}, n_r={cfg.n_r}"
            )
        h_e = h_m
    else:
        h_e = sample_channel(cfg.n_e, cfg.n_t, stream)

    sel = order_and_select(h_m, cfg.l_t)
    r_m = logdet_rate(effective_channel(h_m, sel), cfg.rho_m)
    r_e = logdet_rate(effective_channel(h_e, sel), cfg.rho_e)
    return SecrecySample(r_m=r_m, r_e=r_e)
