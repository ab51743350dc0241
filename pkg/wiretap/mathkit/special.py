"""
Special Functions
=================
Gaussian and chi-square helpers used by the large-system approximation.

The chi-square density here follows the convention of the selection-gain
formulas: f_n is the density of a squared norm of an n-dimensional unit
variance complex Gaussian vector, i.e. Gamma(n, 1) with mean n (2n real
degrees of freedom).
"""

import math

import numpy as np
from scipy.special import erfc, gammaln, gammaincc, logsumexp

from wiretap.config.defaults import POISSON_SUM_MAX_ORDER

_INV_SQRT_2PI = 1.0 / math.sqrt(2.0 * math.pi)


def _check_order(n: int) -> None:
    if int(n) != n or n < 1:
        raise ValueError(f"Chi-square order must be a positive integer, got {n}")


def std_normal_pdf(x: float) -> float:
    """Zero-mean, unit-variance Gaussian density phi(x)."""
    return _INV_SQRT_2PI * math.exp(-0.5 * x * x)


def q_function(x: float) -> float:
    """
    Gaussian tail Q(x) = P(Z > x).

    Evaluated as erfc(x / sqrt(2)) / 2, which keeps full relative precision
    deep in the upper tail.
    """
    return 0.5 * float(erfc(x / math.sqrt(2.0)))


def chi_square_pdf(x: float, n: int) -> float:
    """
    Density f_n(x) = x^(n-1) e^(-x) / (n-1)!  for x >= 0, zero otherwise.

    Computed in log space through log-gamma, so large n does not overflow.
    """
    _check_order(n)
    if x < 0:
        return 0.0
    if x == 0:
        return 1.0 if n == 1 else 0.0
    return math.exp((n - 1) * math.log(x) - x - float(gammaln(n)))


def upper_tail(u: float, n: int) -> float:
    """
    Upper tail mass of f_n beyond u.

    Equals e^(-u) * sum_{k<n} u^k / k!, the regularized upper incomplete
    gamma function Q(n, u). Orders up to POISSON_SUM_MAX_ORDER use the exact
    Poisson sum in log space.
    """
    _check_order(n)
    if u < 0:
        raise ValueError(f"Tail threshold must be non-negative, got {u}")
    if u == 0:
        return 1.0
    if n > POISSON_SUM_MAX_ORDER:
        return float(gammaincc(n, u))

    k = np.arange(n)
    log_terms = -u + k * math.log(u) - gammaln(k + 1)
    value = math.exp(float(logsumexp(log_terms)))
    return min(1.0, value)
