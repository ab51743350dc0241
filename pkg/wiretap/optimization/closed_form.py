"""
Closed-Form Antenna Selection
=============================
Continuous relaxations of the l_t optimization for single-antenna
receivers (n_r = 1), where the selection gain has the explicit mean
eta_t(x) = x * (1 + ln(n_t / x)) and variance x * (2 - x / n_t).

- Example 1 (n_e = 1, eavesdropper in case A): the maximizer of the mean
  secrecy rate solves rho_e*x + ln(x) + rho_e/rho_m = ln(n_t).
- Example 2 (n_e > l_t, case B): the maximizer of the clipped-Gaussian
  ergodic rate c(x) = s*phi(f/s) + f*Q(-f/s) is a stationary point of c.

Both routines round the continuous maximizer to whichever neighbouring
integer scores higher.
"""

import logging
import math
from typing import Callable, Literal, Tuple

from scipy.optimize import minimize_scalar

from wiretap.channel.system import SystemConfig
from wiretap.config.defaults import (
    FALLBACK_XATOL,
    STATIONARY_ABS_TOL,
    STATIONARY_FD_STEP,
)
from wiretap.errors import ConfigurationError, DomainError, NoConvergence, NoSignChange
from wiretap.mathkit import (
    RootSolveSettings,
    central_difference,
    find_root,
    q_function,
    std_normal_pdf,
)
from wiretap.optimization.base import OptimizeResult, OptimizationMethod

logger = logging.getLogger(__name__)

LOG2E = 1.0 / math.log(2.0)

VarianceForm = Literal['exact', 'printed']

# Distance from the interval edge below which a maximizer counts as boundary
_BOUNDARY_TOL = 1e-5


def _validate(n_t: int, rho_m: float, rho_e: float, n_e: int = 1) -> None:
    # Reuse the scenario validation for the scalar arguments
    SystemConfig(n_t=n_t, n_r=1, n_e=n_e, l_t=1, rho_m=rho_m, rho_e=rho_e)


def _check_x(x: float) -> None:
    if not x > 0 or math.isinf(x):
        raise DomainError(f"x must be a finite positive antenna count, got {x}")


def _selection_gain_mean(x: float, n_t: int) -> float:
    return x * (1.0 + math.log(n_t / x))


def _round_to_best_neighbour(
    x_star: float,
    n_t: int,
    objective: Callable[[float], float]
) -> Tuple[int, float]:
    """
    Integer in {floor(x*), ceil(x*)} with the larger objective.

    Equal objectives keep the nearest integer, halves rounding up.
    """
    lower = min(max(1, math.floor(x_star)), n_t)
    upper = min(max(1, math.ceil(x_star)), n_t)
    nearest = lower if x_star - lower < upper - x_star else upper
    other = upper if nearest == lower else lower

    best, best_value = nearest, objective(float(nearest))
    if other != nearest:
        other_value = objective(float(other))
        if other_value > best_value:
            best, best_value = other, other_value
    return best, best_value


# ====================================
# Example 1: n_r = n_e = 1
# ====================================

def example1_objective(x: float, n_t: int, rho_m: float, rho_e: float) -> float:
    """
    Mean secrecy rate with one receive and one eavesdropper antenna:
    log2((1 + rho_m*x*(1 + ln(n_t/x))) / (1 + rho_e*x)).
    """
    _check_x(x)
    return math.log2((1.0 + rho_m * _selection_gain_mean(x, n_t)) / (1.0 + rho_e * x))


def example1_fixed_point(
    n_t: int,
    rho_m: float,
    rho_e: float,
    verbose: bool = False
) -> OptimizeResult:
    """
    Maximize example1_objective over x in [1, n_t].

    The stationary condition g(x) = rho_e*x + ln(x) + rho_e/rho_m - ln(n_t)
    is strictly increasing and positive at n_t. When g(1) >= 0 the mean is
    decreasing on the whole interval and l_star = 1 is returned as a
    boundary result.
    """
    _validate(n_t, rho_m, rho_e)
    offset = rho_e / rho_m - math.log(n_t)

    def stationarity(x: float) -> float:
        return rho_e * x + math.log(x) + offset

    def objective(x: float) -> float:
        return example1_objective(x, n_t, rho_m, rho_e)

    if n_t == 1:
        return OptimizeResult(1.0, 1, objective(1.0), OptimizationMethod.EXAMPLE1_FIXED_POINT,
                              iterations=0, boundary=True)

    try:
        solved = find_root(
            stationarity,
            RootSolveSettings(bracket_lo=1.0, bracket_hi=float(n_t)),
            fprime=lambda x: rho_e + 1.0 / x,
        )
    except NoSignChange:
        logger.info("Mean secrecy rate decreasing on [1, %d]; l*=1", n_t)
        result = OptimizeResult(1.0, 1, objective(1.0), OptimizationMethod.EXAMPLE1_FIXED_POINT,
                                iterations=0, boundary=True)
    else:
        l_star, value = _round_to_best_neighbour(solved.root, n_t, objective)
        result = OptimizeResult(
            x_star=solved.root,
            l_star=l_star,
            objective_at_l_star=value,
            method=OptimizationMethod.EXAMPLE1_FIXED_POINT,
            iterations=solved.iterations,
            boundary=solved.root <= 1.0 + _BOUNDARY_TOL,
        )

    if verbose:
        print(result)
    return result


# ====================================
# Example 2: n_r = 1, n_e > l_t
# ====================================

def _example2_terms(
    x: float,
    n_t: int,
    n_e: int,
    rho_m: float,
    rho_e: float,
    variance_form: VarianceForm
) -> Tuple[float, float]:
    """Mean f(x) and standard deviation s(x) of R* in bits."""
    eta_t = _selection_gain_mean(x, n_t)
    f = math.log2(1.0 + rho_m * eta_t) - x * math.log2(1.0 + rho_e * n_e)
    spread = rho_m ** 2 * x * (2.0 - x / n_t)
    if variance_form == 'exact':
        s2 = spread / (1.0 + rho_m * eta_t) ** 2 + x / n_e
    elif variance_form == 'printed':
        s2 = spread / (1.0 + rho_e * x) ** 2 + 1.0 / x
    else:
        raise ConfigurationError(
            f"variance_form must be 'exact' or 'printed', got {variance_form!r}"
        )
    return f, math.sqrt(s2 * LOG2E ** 2)


def example2_objective(
    x: float,
    n_t: int,
    n_e: int,
    rho_m: float,
    rho_e: float,
    variance_form: VarianceForm = 'exact'
) -> float:
    """
    Clipped-Gaussian ergodic secrecy rate c(x) = s*phi(h) + f*Q(-h), h = f/s.

    Args:
        variance_form: 'exact' evaluates the general variance expression at
                       n_r = 1, so c(l_t) matches the asymptotic ergodic
                       approximation. 'printed' uses the alternative reduced
                       form with (1 + rho_e*x)^2 and 1/x terms.
    """
    _check_x(x)
    f, s = _example2_terms(x, n_t, n_e, rho_m, rho_e, variance_form)
    h = f / s
    return s * std_normal_pdf(h) + f * q_function(-h)


def example2_slope(
    x: float,
    n_t: int,
    n_e: int,
    rho_m: float,
    rho_e: float,
    variance_form: VarianceForm = 'exact'
) -> float:
    """
    Derivative c'(x) = s'*phi(h) + f'*Q(-h).

    The h' contributions cancel, so only f' and s' are needed; both come
    from central differences with step STATIONARY_FD_STEP * max(1, x).
    """
    _check_x(x)
    step = STATIONARY_FD_STEP * max(1.0, x)
    f_hi, s_hi = _example2_terms(x + step, n_t, n_e, rho_m, rho_e, variance_form)
    f_lo, s_lo = _example2_terms(x - step, n_t, n_e, rho_m, rho_e, variance_form)
    f, s = _example2_terms(x, n_t, n_e, rho_m, rho_e, variance_form)
    f_prime = (f_hi - f_lo) / (2.0 * step)
    s_prime = (s_hi - s_lo) / (2.0 * step)
    h = f / s
    return s_prime * std_normal_pdf(h) + f_prime * q_function(-h)


def example2_stationary(
    n_t: int,
    n_e: int,
    rho_m: float,
    rho_e: float,
    variance_form: VarianceForm = 'exact',
    force_fallback: bool = False,
    verbose: bool = False
) -> OptimizeResult:
    """
    Maximize example2_objective over x in [1, n_t].

    The stationary point c'(x) = 0 is solved with the safeguarded Newton
    iteration. If c' does not change sign on [1, n_t] or the solve does not
    converge, a bounded scalar maximization of c is used instead and the
    result is flagged with fallback=True.

    Args:
        n_t: Transmit antennas.
        n_e: Eavesdropper antennas.
        rho_m: Main-channel SNR (linear).
        rho_e: Eavesdropper SNR (linear).
        variance_form: See example2_objective.
        force_fallback: Skip the root solve and use the scalar maximizer.
        verbose: Print the result.
    """
    _validate(n_t, rho_m, rho_e, n_e=n_e)

    def objective(x: float) -> float:
        return example2_objective(x, n_t, n_e, rho_m, rho_e, variance_form)

    def slope(x: float) -> float:
        return example2_slope(x, n_t, n_e, rho_m, rho_e, variance_form)

    if n_t == 1:
        return OptimizeResult(1.0, 1, objective(1.0), OptimizationMethod.EXAMPLE2_STATIONARY,
                              iterations=0, boundary=True)

    x_star = None
    iterations = 0
    fallback = force_fallback
    if not force_fallback and slope(1.0) <= 0:
        # c decreasing at x = 1: any interior stationary point is a minimum
        logger.info("Objective decreasing at x=1; using bounded maximization")
        fallback = True
    if not fallback:
        try:
            solved = find_root(
                slope,
                RootSolveSettings(bracket_lo=1.0, bracket_hi=float(n_t), abs_tol=STATIONARY_ABS_TOL),
                fprime=lambda x: central_difference(slope, x, rel_step=STATIONARY_FD_STEP),
            )
            x_star, iterations = solved.root, solved.iterations
        except (NoSignChange, NoConvergence) as exc:
            logger.info("Stationary solve failed (%s); using bounded maximization", exc)
            fallback = True

    if x_star is None:
        res = minimize_scalar(
            lambda x: -objective(x),
            bounds=(1.0, float(n_t)),
            method='bounded',
            options={'xatol': FALLBACK_XATOL},
        )
        x_star, iterations = float(res.x), int(res.nfev)

    l_star, value = _round_to_best_neighbour(x_star, n_t, objective)
    result = OptimizeResult(
        x_star=x_star,
        l_star=l_star,
        objective_at_l_star=value,
        method=OptimizationMethod.EXAMPLE2_STATIONARY,
        iterations=iterations,
        boundary=x_star <= 1.0 + _BOUNDARY_TOL or x_star >= n_t - _BOUNDARY_TOL,
        fallback=fallback,
    )
    if verbose:
        print(result)
    return result
