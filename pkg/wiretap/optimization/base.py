"""
Optimization Base Classes
=========================
Abstract base class and result type shared by the antenna-count optimizers.
"""

from abc import ABC, abstractmethod
from dataclasses import dataclass
from enum import Enum
from typing import Optional, TYPE_CHECKING

import pandas as pd

from wiretap.channel.system import SystemConfig

if TYPE_CHECKING:
    from wiretap.optimization.objectives import ObjectiveFunction


class OptimizationMethod(str, Enum):
    """Identifier reported in every OptimizeResult."""
    GRID = 'grid'
    EXAMPLE1_FIXED_POINT = 'example1_fixed_point'
    EXAMPLE2_STATIONARY = 'example2_stationary'


@dataclass
class OptimizeResult:
    """
    Result of an antenna-count optimization.

    Attributes:
        x_star: Continuous maximizer (equals l_star for the grid method).
        l_star: Integer number of selected antennas in [1, n_t].
        objective_at_l_star: Objective evaluated at l_star.
        method: Which optimizer produced the result.
        iterations: Root-finder iterations or grid evaluations.
        boundary: True when the maximizer sits at the edge of [1, n_t].
        fallback: True when the bounded scalar search replaced the root solve.
        all_evaluations: Objective per l_t (grid method only).
    """
    x_star: float
    l_star: int
    objective_at_l_star: float
    method: OptimizationMethod
    iterations: int = 0
    boundary: bool = False
    fallback: bool = False
    all_evaluations: Optional[pd.DataFrame] = None

    def __post_init__(self):
        if self.l_star < 1:
            raise ValueError(f"l_star must be >= 1, got {self.l_star}")

    def __str__(self) -> str:
        return (
            f"OptimizeResult(\n"
            f"  Method: {self.method.value}\n"
            f"  x*: {self.x_star:.6g}\n"
            f"  l*: {self.l_star}\n"
            f"  Objective: {self.objective_at_l_star:.6g}\n"
            f"  Iterations: {self.iterations}\n"
            f"  Boundary: {self.boundary}\n"
            f")"
        )


class Optimizer(ABC):
    """
    Abstract base class for l_t optimizers working on a configuration template.

    The template's l_t is ignored; optimizers vary it over [1, n_t].
    """

    @abstractmethod
    def optimize(
        self,
        objective: 'ObjectiveFunction',
        cfg_template: SystemConfig,
        verbose: bool = False
    ) -> OptimizeResult:
        """
        Run optimization and return the best l_t.

        Args:
            objective: Objective to maximize.
            cfg_template: Scenario whose l_t is varied.
            verbose: If True, print progress information.
        """
        pass

    @property
    @abstractmethod
    def name(self) -> str:
        """Human-readable name of the optimizer."""
        pass
