"""
Ergodic and Outage Measures
===========================
Secrecy measures of the clipped Gaussian [R*]^+ with R* ~ N(eta, sigma^2).
"""

import math
import warnings

from wiretap.asymptotic.moments import AsymptoticMoments
from wiretap.errors import DegenerateVariance, DegenerateVarianceWarning, DomainError
from wiretap.mathkit import q_function, std_normal_pdf


def ergodic_approx(m: AsymptoticMoments) -> float:
    """
    Expected secrecy rate E[[R*]^+] = sigma*phi(xi) + eta*Q(-xi), xi = eta/sigma.

    A zero variance degenerates to max(0, eta).
    """
    sigma = m.sigma
    if sigma == 0:
        return max(0.0, m.eta)
    xi = m.eta / sigma
    return sigma * std_normal_pdf(xi) + m.eta * q_function(-xi)


def lower_bound(m: AsymptoticMoments) -> float:
    """[eta]^+, the lower bound the ergodic approximation exceeds for eta > 0."""
    return max(0.0, m.eta)


def outage_approx(m: AsymptoticMoments, r_out: float, strict: bool = False) -> float:
    """
    Secrecy outage probability P([R*]^+ <= r_out) = 1 - Q((r_out - eta) / sigma).

    Args:
        m: Asymptotic moments.
        r_out: Target secrecy rate in bits (>= 0).
        strict: Raise DegenerateVariance on zero variance instead of falling
                back to the step function 1{r_out > eta}.
    """
    if not r_out >= 0 or math.isinf(r_out):
        raise DomainError(f"r_out must be a finite non-negative rate, got {r_out}")
    if m.sigma2 == 0:
        if strict:
            raise DegenerateVariance("Outage probability requested with zero variance")
        warnings.warn(
            "Zero variance: outage probability reduces to a step at eta",
            DegenerateVarianceWarning,
            stacklevel=2,
        )
        return 1.0 if r_out > m.eta else 0.0
    # 1 - Q(z) == Q(-z), kept in this form for accuracy in the lower tail
    return q_function(-(r_out - m.eta) / m.sigma)
