"""
Transmit Antenna Selection
==========================
Norm-based selection: order the columns of the main channel by squared norm
and keep the strongest l_t. The eavesdropper's effective channel uses the
same index set.
"""

import numpy as np

from wiretap.channel.system import ComplexMatrix, SelectionSet
from wiretap.errors import ConfigurationError, IndexOutOfRange


def order_and_select(h_m: ComplexMatrix, l_t: int) -> SelectionSet:
    """
    Order columns of h_m by non-increasing squared norm and select the first l_t.

    Ties keep the lower original index first (stable sort).
    """
    if not 1 <= l_t <= h_m.cols:
        raise ConfigurationError(f"l_t must lie in [1, {h_m.cols}], got {l_t}")
    ordered = np.argsort(-h_m.column_norms_sq, kind='stable')
    ordered_idx = tuple(int(i) for i in ordered)
    return SelectionSet(ordered=ordered_idx, selected=ordered_idx[:l_t])


def effective_channel(h: ComplexMatrix, sel: SelectionSet) -> ComplexMatrix:
    """Columns of h listed in sel.selected, in that order."""
    if max(sel.selected) >= h.cols:
        raise IndexOutOfRange(
            f"Selection addresses column {max(sel.selected)} but the channel has {h.cols} columns"
        )
    return ComplexMatrix(h.entries[:, list(sel.selected)], provenance=f"{h.provenance}/selected")


def selection_gain(h_m: ComplexMatrix, sel: SelectionSet) -> float:
    """Sum of the squared norms of the selected columns (trace of H~^H H~)."""
    return float(np.sum(h_m.column_norms_sq[list(sel.selected)]))
