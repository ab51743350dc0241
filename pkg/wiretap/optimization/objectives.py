"""
Objective Functions
===================
Asymptotic secrecy objectives evaluated on a full configuration.

Optimizers maximize: the ergodic objective returns the approximate
ergodic secrecy rate, the outage objective returns the approximate
probability of *not* being in outage.
"""

from abc import ABC, abstractmethod
from typing import Optional, Union

from wiretap.asymptotic import ergodic_approx, outage_approx, secrecy_moments
from wiretap.channel.system import SystemConfig
from wiretap.errors import ConfigurationError, MissingThreshold


class ObjectiveFunction(ABC):
    """Scalar objective of a SystemConfig; larger is better."""

    @abstractmethod
    def evaluate(self, cfg: SystemConfig) -> float:
        pass

    @property
    @abstractmethod
    def name(self) -> str:
        """Human-readable name of the objective."""
        pass

    def __call__(self, cfg: SystemConfig) -> float:
        return self.evaluate(cfg)


class ErgodicObjective(ObjectiveFunction):
    """Approximate ergodic secrecy rate E[[R*]^+] in bits."""

    def evaluate(self, cfg: SystemConfig) -> float:
        return ergodic_approx(secrecy_moments(cfg))

    @property
    def name(self) -> str:
        return "Ergodic Secrecy Rate"


class OutageObjective(ObjectiveFunction):
    """
    Approximate non-outage probability 1 - P_out(r_out).

    Maximizing it minimizes the outage probability.
    """

    def __init__(self, r_out: float):
        if not r_out >= 0:
            raise ConfigurationError(f"r_out must be non-negative, got {r_out}")
        self.r_out = float(r_out)

    def evaluate(self, cfg: SystemConfig) -> float:
        return 1.0 - outage_approx(secrecy_moments(cfg), self.r_out)

    @property
    def name(self) -> str:
        return f"Non-Outage Probability (r_out={self.r_out:g})"


def make_objective(
    objective: Union[str, ObjectiveFunction],
    r_out: Optional[float] = None
) -> ObjectiveFunction:
    """
    Resolve 'ergodic' / 'outage' (or an ObjectiveFunction instance).

    Raises:
        MissingThreshold: For 'outage' without r_out.
        ConfigurationError: For an unknown name.
    """
    if isinstance(objective, ObjectiveFunction):
        return objective
    if objective == 'ergodic':
        return ErgodicObjective()
    if objective == 'outage':
        if r_out is None:
            raise MissingThreshold("The outage objective requires r_out")
        return OutageObjective(r_out)
    raise ConfigurationError(f"objective must be 'ergodic' or 'outage', got {objective!r}")
