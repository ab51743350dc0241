"""
Results Formatter
=================
Console summaries of sweep and optimization runs.
"""

from __future__ import annotations

import math
from typing import TYPE_CHECKING

import pandas as pd

if TYPE_CHECKING:
    from wiretap.asymptotic import AsymptoticMoments
    from wiretap.cli.run_config import RunConfig
    from wiretap.optimization import OptimizeResult


def _cell(value: object, width: int) -> str:
    if value is None or (isinstance(value, float) and math.isnan(value)):
        return f"{'-':>{width}}"
    if isinstance(value, float):
        return f"{value:>{width}.4f}"
    return f"{str(value):>{width}}"


class ResultsFormatter:
    """
    Format and display run results.

    Example:
        >>> ResultsFormatter.print_run_header(config)
        >>> ResultsFormatter.print_sweep_table(frame)
    """

    @staticmethod
    def print_run_header(config: 'RunConfig', title: str = "SECRECY RUN") -> None:
        """Print the scenario and run settings."""
        s = config.scenario
        print(f"\n{'=' * 70}")
        print(title)
        print(f"{'=' * 70}")
        print(f"{'Transmit / receive / eavesdropper antennas':<45} {s.n_t:>6} / {s.n_r} / {s.n_e}")
        print(f"{'Selected antennas (l_t)':<45} {'swept' if s.l_t is None else s.l_t:>6}")
        print(f"{'Main / eavesdropper SNR':<45} {s.rho_m_db:>6g} / {s.rho_e_db:g} dB")
        print(f"{'Mode':<45} {config.mode:>6}")
        if config.sweep is not None:
            print(f"{'Sweep':<45} {config.sweep.variable} ({len(config.sweep.values)} points)")
        if config.simulates:
            print(f"{'Trials / seed':<45} {config.trials:>6} / {config.seed}")
        if config.r_out is not None:
            print(f"{'Outage rate r_out':<45} {config.r_out:>6g} bits")
        print("-" * 70)

    @staticmethod
    def print_sweep_table(frame: pd.DataFrame, max_rows: int = 20) -> None:
        """Print the first max_rows records, skipping all-empty columns."""
        shown = [c for c in frame.columns if c != 'variable' and frame[c].notna().any()]
        width = 12
        print(''.join(f"{c:>{width}}" for c in shown))
        print("-" * (width * len(shown)))
        for _, row in frame.head(max_rows).iterrows():
            print(''.join(_cell(row[c], width) for c in shown))
        if len(frame) > max_rows:
            print(f"... ({len(frame) - max_rows} more rows)")
        print("=" * 70)

    @staticmethod
    def print_moments(m: 'AsymptoticMoments', title: str = "ASYMPTOTIC MOMENTS") -> None:
        """Print the large-system moments of R*."""
        print(f"\n{'=' * 70}")
        print(title)
        print(f"{'=' * 70}")
        print(f"\n{'Quantity':<45} {'Value':>20}")
        print("-" * 70)
        print(f"{'Chi-square threshold u':<45} {m.u:>20.6f}")
        print(f"{'Selection gain mean eta_t':<45} {m.eta_t:>20.6f}")
        print(f"{'Selection gain variance sigma_t^2':<45} {m.sigma_t2:>20.6f}")
        print("-" * 70)
        print(f"{'Main-channel rate mean':<45} {m.eta_m:>15.6f} bits")
        print(f"{'Eavesdropper rate mean':<45} {m.eta_e:>15.6f} bits")
        print(f"{'Secrecy rate mean eta':<45} {m.eta:>15.6f} bits")
        print(f"{'Secrecy rate std sigma':<45} {m.sigma:>15.6f} bits")
        print("=" * 70)

    @staticmethod
    def print_optimization(result: 'OptimizeResult', title: str = "ANTENNA SELECTION") -> None:
        """Print an OptimizeResult."""
        print(f"\n{'=' * 70}")
        print(title)
        print(f"{'=' * 70}")
        print(f"{'Method':<45} {result.method.value:>20}")
        print(f"{'Continuous maximizer x*':<45} {result.x_star:>20.4f}")
        print(f"{'Selected antennas l*':<45} {result.l_star:>20}")
        print(f"{'Objective at l*':<45} {result.objective_at_l_star:>20.6f}")
        print(f"{'Iterations':<45} {result.iterations:>20}")
        if result.boundary:
            print("⚠️  Maximizer on the boundary of [1, n_t]")
        if result.fallback:
            print("⚠️  Stationary solve failed; bounded maximization used")
        print("=" * 70)
