"""
Grid Optimizer
==============
Exhaustive scan of l_t over [1, n_t] on an asymptotic objective.

This is the reference optimizer: it applies to every antenna
configuration, whereas the closed-form routines cover single-antenna
receivers only.
"""

import logging
from typing import Optional, Union

import pandas as pd

from wiretap.channel.system import SystemConfig
from wiretap.optimization.base import Optimizer, OptimizeResult, OptimizationMethod
from wiretap.optimization.objectives import ObjectiveFunction, make_objective

logger = logging.getLogger(__name__)


class GridOptimizer(Optimizer):
    """
    Evaluate the objective at every l_t and keep the maximizer.

    Ties resolve to the smaller l_t.

    Example:
        result = GridOptimizer().optimize(ErgodicObjective(), cfg)
        print(result.l_star)
    """

    @property
    def name(self) -> str:
        return "GridOptimizer"

    def optimize(
        self,
        objective: ObjectiveFunction,
        cfg_template: SystemConfig,
        verbose: bool = False
    ) -> OptimizeResult:
        n_t = cfg_template.n_t

        if verbose:
            print(f"\n{'='*70}")
            print(f"🔍 {self.name} - l_t Scan")
            print(f"{'='*70}")
            print(f"Scenario: n_t={n_t}, n_r={cfg_template.n_r}, n_e={cfg_template.n_e}, "
                  f"rho_m={cfg_template.rho_m:g}, rho_e={cfg_template.rho_e:g}")
            print(f"Objective: {objective.name}")
            print()

        rows = []
        best_lt = 1
        best_value = float('-inf')
        for l_t in range(1, n_t + 1):
            value = objective.evaluate(cfg_template.with_selection(l_t))
            rows.append({'l_t': l_t, 'objective': value})
            # strict comparison keeps the smallest l_t on ties
            if value > best_value:
                best_lt, best_value = l_t, value

        logger.debug("Grid scan over %d values of l_t: l*=%d objective=%.6g",
                     n_t, best_lt, best_value)

        if verbose:
            print(f"{'='*70}")
            print(f"✅ Optimization Complete")
            print(f"{'='*70}")
            print(f"Optimal l_t: {best_lt}")
            print(f"Objective: {best_value:.6f}")
            print(f"Evaluations: {n_t}")

        return OptimizeResult(
            x_star=float(best_lt),
            l_star=best_lt,
            objective_at_l_star=best_value,
            method=OptimizationMethod.GRID,
            iterations=n_t,
            boundary=best_lt in (1, n_t),
            all_evaluations=pd.DataFrame(rows),
        )


def optimal_lt_grid(
    cfg_template: SystemConfig,
    objective: Union[str, ObjectiveFunction] = 'ergodic',
    r_out: Optional[float] = None,
    verbose: bool = False
) -> OptimizeResult:
    """
    Best l_t for cfg_template under 'ergodic' or 'outage' (needs r_out).
    """
    return GridOptimizer().optimize(make_objective(objective, r_out), cfg_template, verbose=verbose)
