"""
Large-System Moments
====================
Mean and variance of the unclipped secrecy rate R* = R_m - R_e as the
number of transmit antennas grows.

The main-channel rate is driven by the selection gain (sum of the l_t
largest squared column norms), whose mean and variance follow from the
chi-square threshold u. From the eavesdropper's side the selection is
random, so its rate has the moments of an unselected i.i.d. channel.
All rates are in bits; variances derived in nats carry a log2(e)^2 factor.
"""

from __future__ import annotations

import logging
import math
import warnings
from dataclasses import dataclass
from typing import Literal, Optional, Tuple

from wiretap.channel.system import SystemConfig
from wiretap.config.defaults import DEFAULT_ABS_TOL, VARIANCE_CLAMP_TOL
from wiretap.errors import NegativeVariance, UnsupportedRegimeWarning
from wiretap.mathkit import RootSolveSettings, chi_square_pdf, find_root, upper_tail

logger = logging.getLogger(__name__)

LOG2E = 1.0 / math.log(2.0)

Regime = Literal['case_a', 'case_b', 'boundary']


@dataclass(frozen=True)
class AsymptoticMoments:
    """
    Large-system moments for one configuration.

    Attributes:
        u: Chi-square threshold with upper tail mass l_t / n_t.
        eta_t: Mean of the selection gain.
        sigma_t2: Variance of the selection gain.
        xi_t: Second-moment correction entering sigma_t2.
        eta_m: Mean of the main-channel rate (bits).
        sigma_m2: Variance of the main-channel rate (bits^2).
        eta_e: Mean of the eavesdropper rate (bits).
        sigma_e2: Variance of the eavesdropper rate (bits^2).
        eta: Mean of R* (bits).
        sigma2: Variance of R* (bits^2).
        l_m, m_m: min / max of (l_t, n_r).
        l_e, m_e: min / max of (l_t, n_e).
    """
    u: float
    eta_t: float
    sigma_t2: float
    xi_t: float
    eta_m: float
    sigma_m2: float
    eta_e: float
    sigma_e2: float
    eta: float
    sigma2: float
    l_m: int
    m_m: int
    l_e: int
    m_e: int

    def __post_init__(self):
        for name in ('sigma_t2', 'sigma_m2', 'sigma_e2', 'sigma2'):
            if getattr(self, name) < 0:
                raise NegativeVariance(f"{name} must be non-negative, got {getattr(self, name)}")

    @property
    def sigma(self) -> float:
        """Standard deviation of R* (bits)."""
        return math.sqrt(self.sigma2)


def regime(cfg: SystemConfig) -> Regime:
    """
    Classify the eavesdropper regime.

    'case_a' when the eavesdropper has fewer antennas than are selected,
    'case_b' when it has more, 'boundary' when the counts coincide.
    """
    if cfg.n_e < cfg.l_t:
        return 'case_a'
    if cfg.n_e > cfg.l_t:
        return 'case_b'
    return 'boundary'


def _tail_bracket_hi(n_r: int, target: float) -> float:
    hi = max(1.0, 2.0 * n_r)
    while upper_tail(hi, n_r) > target:
        hi *= 2.0
    return hi


def solve_threshold_u(cfg: SystemConfig) -> float:
    """
    Threshold u >= 0 whose chi-square upper tail (order n_r) equals l_t / n_t.

    Full selection gives u = 0.
    """
    if cfg.l_t == cfg.n_t:
        return 0.0
    target = cfg.l_t / cfg.n_t
    n_r = cfg.n_r
    # Tolerance relative to the target keeps small tail masses accurate
    settings = RootSolveSettings(
        bracket_lo=0.0,
        bracket_hi=_tail_bracket_hi(n_r, target),
        abs_tol=DEFAULT_ABS_TOL * target,
    )
    result = find_root(
        lambda u: upper_tail(u, n_r) - target,
        settings,
        fprime=lambda u: -chi_square_pdf(u, n_r),
    )
    logger.debug("Threshold u=%.12g for n_r=%d, l_t/n_t=%.6g (%d iterations)",
                 result.root, n_r, target, result.iterations)
    return result.root


def _selection_moments_at(cfg: SystemConfig, u: float) -> Tuple[float, float, float]:
    n_r, n_t, l_t = cfg.n_r, cfg.n_t, cfg.l_t
    f1 = chi_square_pdf(u, n_r + 1)
    f2 = chi_square_pdf(u, n_r + 2)

    eta_t = n_r * (l_t + n_t * f1)
    xi_t = n_r * (n_r + 1) * (l_t + n_t * f1 + n_t * f2)
    sigma_t2 = (l_t * u - eta_t) ** 2 * (1.0 / l_t - 1.0 / n_t) - eta_t ** 2 / l_t + xi_t

    if sigma_t2 < 0:
        if sigma_t2 < -VARIANCE_CLAMP_TOL:
            raise NegativeVariance(
                f"Selection-gain variance is negative ({sigma_t2:.3e}) for {cfg}; "
                "the configuration is outside the large-system regime"
            )
        sigma_t2 = 0.0
    return eta_t, sigma_t2, xi_t


def selection_moments(cfg: SystemConfig) -> Tuple[float, float, float]:
    """
    Mean, variance and second-moment correction of the selection gain.

    Returns:
        Tuple (eta_t, sigma_t2, xi_t).

    Raises:
        NegativeVariance: If sigma_t2 falls below -VARIANCE_CLAMP_TOL.
    """
    return _selection_moments_at(cfg, solve_threshold_u(cfg))


def eavesdropper_moments(cfg: SystemConfig) -> Tuple[float, float]:
    """
    Mean and variance (bits, bits^2) of the eavesdropper rate.

    When n_e == l_t neither regime applies; the n_e > l_t branch is used
    and an UnsupportedRegimeWarning is emitted.
    """
    l_e = min(cfg.l_t, cfg.n_e)
    m_e = max(cfg.l_t, cfg.n_e)
    rho_e = cfg.rho_e

    eta_e = l_e * math.log2(1.0 + rho_e * m_e)

    if cfg.n_e < cfg.l_t:
        spread = l_e * m_e * rho_e ** 2 / (1.0 + rho_e * m_e) ** 2
    else:
        if cfg.n_e == cfg.l_t:
            warnings.warn(
                f"n_e == l_t == {cfg.l_t}: eavesdropper variance uses the n_e > l_t branch",
                UnsupportedRegimeWarning,
                stacklevel=2,
            )
        spread = l_e / m_e
    return eta_e, spread * LOG2E ** 2


def main_rate_moments(
    cfg: SystemConfig,
    eta_t: Optional[float] = None,
    sigma_t2: Optional[float] = None
) -> Tuple[float, float]:
    """
    Mean and variance (bits, bits^2) of the main-channel rate.

    The selection-gain moments are computed from cfg unless both are given.
    """
    if eta_t is None or sigma_t2 is None:
        eta_t, sigma_t2, _ = selection_moments(cfg)
    l_m = min(cfg.l_t, cfg.n_r)
    m_m = max(cfg.l_t, cfg.n_r)
    rho_m = cfg.rho_m
    denom = l_m + rho_m * eta_t

    eta_m = (
        l_m * math.log2(1.0 + rho_m * eta_t / l_m)
        - l_m * (l_m - 1) * rho_m ** 2 * eta_t ** 2 / (2.0 * m_m * denom ** 2) * LOG2E
    )
    slope = l_m * rho_m / denom - l_m ** 2 * (l_m - 1) * rho_m ** 2 * eta_t / (m_m * denom ** 3)
    sigma_m2 = slope ** 2 * sigma_t2 * LOG2E ** 2
    return eta_m, sigma_m2


def secrecy_moments(cfg: SystemConfig) -> AsymptoticMoments:
    """
    Gaussian moments of R* = R_m - R_e in the large-system limit.

    The main and eavesdropper channels are independent, so means subtract
    and variances add.
    """
    u = solve_threshold_u(cfg)
    eta_t, sigma_t2, xi_t = _selection_moments_at(cfg, u)
    eta_m, sigma_m2 = main_rate_moments(cfg, eta_t, sigma_t2)
    eta_e, sigma_e2 = eavesdropper_moments(cfg)

    return AsymptoticMoments(
        u=u,
        eta_t=eta_t,
        sigma_t2=sigma_t2,
        xi_t=xi_t,
        eta_m=eta_m,
        sigma_m2=sigma_m2,
        eta_e=eta_e,
        sigma_e2=sigma_e2,
        eta=eta_m - eta_e,
        sigma2=sigma_m2 + sigma_e2,
        l_m=min(cfg.l_t, cfg.n_r),
        m_m=max(cfg.l_t, cfg.n_r),
        l_e=min(cfg.l_t, cfg.n_e),
        m_e=max(cfg.l_t, cfg.n_e),
    )
