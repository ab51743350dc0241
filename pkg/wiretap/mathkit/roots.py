"""
Scalar Root Finding
===================
Safeguarded Newton iteration on a bracketing interval.

A Newton step is taken whenever it stays inside the current bracket and
shrinks the step fast enough; otherwise the bracket is bisected. The
bracket is updated after every evaluation, so the iteration can never
leave the region where the sign change is known.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import Callable, Optional

from wiretap.config.defaults import DEFAULT_ABS_TOL, DEFAULT_MAX_ITER, DEFAULT_NEWTON_STEP
from wiretap.errors import NoConvergence, NoSignChange

logger = logging.getLogger(__name__)

ScalarFunction = Callable[[float], float]


@dataclass(frozen=True)
class RootSolveSettings:
    """
    Settings for a bracketed root solve.

    Attributes:
        bracket_lo: Lower end of the bracket.
        bracket_hi: Upper end of the bracket.
        abs_tol: Accepted |f(x)| at the returned root.
        max_iter: Iteration cap.
    """
    bracket_lo: float
    bracket_hi: float
    abs_tol: float = DEFAULT_ABS_TOL
    max_iter: int = DEFAULT_MAX_ITER

    def __post_init__(self):
        if not self.abs_tol > 0:
            raise ValueError(f"abs_tol must be positive, got {self.abs_tol}")
        if self.max_iter < 1:
            raise ValueError(f"max_iter must be >= 1, got {self.max_iter}")
        if not self.bracket_lo < self.bracket_hi:
            raise ValueError(
                f"Invalid bracket: lo={self.bracket_lo} must be below hi={self.bracket_hi}"
            )


@dataclass(frozen=True)
class RootSolveResult:
    """Root together with the number of iterations spent finding it."""
    root: float
    iterations: int
    residual: float


def central_difference(f: ScalarFunction, x: float, rel_step: float = DEFAULT_NEWTON_STEP) -> float:
    """Central finite difference of f at x with step rel_step * max(1, |x|)."""
    h = rel_step * max(1.0, abs(x))
    return (f(x + h) - f(x - h)) / (2.0 * h)


def find_root(
    f: ScalarFunction,
    settings: RootSolveSettings,
    fprime: Optional[ScalarFunction] = None,
) -> RootSolveResult:
    """
    Find x in the bracket with |f(x)| <= settings.abs_tol.

    Args:
        f: Continuous, strictly monotone function on the bracket.
        settings: Bracket, tolerance and iteration cap.
        fprime: Analytic derivative. A central difference is used when None.

    Returns:
        RootSolveResult with the root, iteration count and final residual.

    Raises:
        NoSignChange: If f has the same sign at both bracket ends.
        NoConvergence: If the iteration cap is reached.
    """
    lo, hi = settings.bracket_lo, settings.bracket_hi
    tol = settings.abs_tol

    f_lo, f_hi = f(lo), f(hi)
    if abs(f_lo) <= tol:
        return RootSolveResult(lo, 0, f_lo)
    if abs(f_hi) <= tol:
        return RootSolveResult(hi, 0, f_hi)
    if f_lo * f_hi > 0:
        raise NoSignChange(
            f"f has the same sign on [{lo}, {hi}]: f(lo)={f_lo:.6g}, f(hi)={f_hi:.6g}"
        )

    # Orient so that f(x_neg) < 0 < f(x_pos)
    if f_lo < 0:
        x_neg, x_pos = lo, hi
    else:
        x_neg, x_pos = hi, lo

    derivative = fprime if fprime is not None else (lambda x: central_difference(f, x))

    x = 0.5 * (lo + hi)
    step_old = abs(hi - lo)
    step = step_old

    for iteration in range(1, settings.max_iter + 1):
        fx = f(x)
        if abs(fx) <= tol:
            return RootSolveResult(x, iteration, fx)

        if fx < 0:
            x_neg = x
        else:
            x_pos = x

        left, right = min(x_neg, x_pos), max(x_neg, x_pos)
        if right - left <= 4.0 * math.ulp(max(1.0, abs(x))):
            # Bracket collapsed to floating-point resolution
            logger.debug("Bracket collapsed at x=%.17g with |f|=%.3g", x, abs(fx))
            return RootSolveResult(x, iteration, fx)

        dfx = derivative(x)
        use_bisection = True
        if dfx != 0 and math.isfinite(dfx):
            candidate = x - fx / dfx
            newton_step = abs(candidate - x)
            if left < candidate < right and newton_step <= 0.5 * step_old:
                use_bisection = False

        step_old = step
        if use_bisection:
            candidate = 0.5 * (left + right)
        step = abs(candidate - x)
        x = candidate

    raise NoConvergence(
        f"Root solve did not reach |f| <= {tol:g} within {settings.max_iter} iterations "
        f"(last x={x:.17g})"
    )


def solve_monotone_root(
    f: ScalarFunction,
    settings: RootSolveSettings,
    fprime: Optional[ScalarFunction] = None,
) -> float:
    """Root of a monotone function on the settings bracket (see find_root)."""
    return find_root(f, settings, fprime).root
