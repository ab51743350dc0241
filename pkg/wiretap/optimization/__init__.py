"""
Optimization Module
===================
Selection of the number of active transmit antennas l_t.

Available Optimizers:
- GridOptimizer: exhaustive scan of l_t = 1..n_t on the asymptotic objective
- example1_fixed_point: closed-form fixed point (single-antenna receivers, case A)
- example2_stationary: stationary point of the single-antenna-receiver,
  case-B objective with a bounded scalar fallback
"""

from wiretap.optimization.base import (
    Optimizer,
    OptimizeResult,
    OptimizationMethod,
)
from wiretap.optimization.objectives import (
    ObjectiveFunction,
    ErgodicObjective,
    OutageObjective,
    make_objective,
)
from wiretap.optimization.grid import GridOptimizer, optimal_lt_grid
from wiretap.optimization.closed_form import (
    example1_objective,
    example1_fixed_point,
    example2_objective,
    example2_slope,
    example2_stationary,
)

__all__ = [
    # Base classes
    'Optimizer',
    'OptimizeResult',
    'OptimizationMethod',
    # Objective functions
    'ObjectiveFunction',
    'ErgodicObjective',
    'OutageObjective',
    'make_objective',
    # Optimizers
    'GridOptimizer',
    'optimal_lt_grid',
    'example1_objective',
    'example1_fixed_point',
    'example2_objective',
    'example2_slope',
    'example2_stationary',
]
