"""
Channel Value Types
===================
Immutable value types shared by the exact model, the approximation and the
Monte Carlo harness.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from typing import Tuple

import numpy as np

from wiretap.errors import ConfigurationError


@dataclass(frozen=True)
class SystemConfig:
    """
    Immutable scenario configuration.

    SNRs are linear power ratios; dB values are converted at the CLI boundary.

    Attributes:
        n_t: Transmit antennas.
        n_r: Legitimate receive antennas.
        n_e: Eavesdropper antennas.
        l_t: Selected transmit antennas (1 <= l_t <= n_t).
        rho_m: Main-channel SNR per receive antenna.
        rho_e: Eavesdropper SNR per receive antenna.
    """
    n_t: int
    n_r: int
    n_e: int
    l_t: int
    rho_m: float
    rho_e: float

    def __post_init__(self):
        for name in ('n_t', 'n_r', 'n_e', 'l_t'):
            value = getattr(self, name)
            if isinstance(value, bool) or int(value) != value or value < 1:
                raise ConfigurationError(f"{name} must be a positive integer, got {value}")
            object.__setattr__(self, name, int(value))
        if self.l_t > self.n_t:
            raise ConfigurationError(f"l_t must not exceed n_t, got l_t={self.l_t}, n_t={self.n_t}")
        for name in ('rho_m', 'rho_e'):
            value = getattr(self, name)
            if not math.isfinite(value) or value <= 0:
                raise ConfigurationError(f"{name} must be finite and positive, got {value}")
            object.__setattr__(self, name, float(value))

    def with_selection(self, l_t: int) -> SystemConfig:
        """Copy of this configuration selecting l_t antennas."""
        return replace(self, l_t=l_t)


@dataclass(frozen=True, eq=False)
class ComplexMatrix:
    """
    Dense complex channel matrix.

    Attributes:
        entries: 2-D complex array of channel gains.
        provenance: Short description of where the matrix came from.
    """
    entries: np.ndarray
    provenance: str = "given"

    def __post_init__(self):
        entries = np.asarray(self.entries, dtype=np.complex128)
        if entries.ndim != 2 or entries.size == 0:
            raise ConfigurationError(f"Channel matrix must be a non-empty 2-D array, got shape {entries.shape}")
        if not np.all(np.isfinite(entries)):
            raise ConfigurationError("Channel matrix contains non-finite entries")
        object.__setattr__(self, 'entries', entries)

    @property
    def rows(self) -> int:
        return self.entries.shape[0]

    @property
    def cols(self) -> int:
        return self.entries.shape[1]

    @property
    def column_norms_sq(self) -> np.ndarray:
        """Squared Euclidean norm of every column."""
        return np.sum(self.entries.real ** 2 + self.entries.imag ** 2, axis=0)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ComplexMatrix):
            return NotImplemented
        return self.entries.shape == other.entries.shape and bool(np.array_equal(self.entries, other.entries))

    __hash__ = None  # type: ignore[assignment]


@dataclass(frozen=True)
class SelectionSet:
    """
    Outcome of the selection protocol.

    Indices are zero-based column indices.

    Attributes:
        ordered: All column indices sorted by non-increasing column norm.
        selected: The first l_t entries of ``ordered``.
    """
    ordered: Tuple[int, ...]
    selected: Tuple[int, ...]

    def __post_init__(self):
        n = len(self.ordered)
        if n == 0 or len(set(self.ordered)) != n or min(self.ordered) != 0 or max(self.ordered) != n - 1:
            raise ConfigurationError(f"ordered must be a permutation of 0..{n - 1}")
        l = len(self.selected)
        if not 1 <= l <= n or tuple(self.ordered[:l]) != tuple(self.selected):
            raise ConfigurationError("selected must be a non-empty prefix of ordered")

    @property
    def n_t(self) -> int:
        return len(self.ordered)

    @property
    def l_t(self) -> int:
        return len(self.selected)

    def power_diagonal(self) -> np.ndarray:
        """Diagonal of the power allocation matrix: 1 on selected antennas, 0 elsewhere."""
        q = np.zeros(self.n_t)
        q[list(self.selected)] = 1.0
        return q


@dataclass(frozen=True)
class SecrecySample:
    """
    Instantaneous rates of one channel realization, in bits.

    Attributes:
        r_m: Main-channel rate.
        r_e: Eavesdropper rate.
        r_s: Secrecy rate max(0, r_m - r_e).
    """
    r_m: float
    r_e: float
    r_s: float = field(init=False)

    def __post_init__(self):
        if self.r_m < 0 or self.r_e < 0:
            raise ConfigurationError(f"Rates must be non-negative, got r_m={self.r_m}, r_e={self.r_e}")
        object.__setattr__(self, 'r_s', max(0.0, self.r_m - self.r_e))

    @property
    def r_star(self) -> float:
        """Unclipped difference r_m - r_e."""
        return self.r_m - self.r_e
