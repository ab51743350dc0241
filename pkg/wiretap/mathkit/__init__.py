"""
Math Kit
========
Special functions and scalar root finding shared by the analytic modules.

- std_normal_pdf, q_function: standard Gaussian density and tail
- chi_square_pdf, upper_tail: the Gamma(n, 1) density and its upper tail
- solve_monotone_root: safeguarded Newton on a sign-changing bracket
"""

from wiretap.mathkit.special import (
    std_normal_pdf,
    q_function,
    chi_square_pdf,
    upper_tail,
)
from wiretap.mathkit.roots import (
    RootSolveSettings,
    RootSolveResult,
    find_root,
    solve_monotone_root,
    central_difference,
)

__all__ = [
    'std_normal_pdf',
    'q_function',
    'chi_square_pdf',
    'upper_tail',
    'RootSolveSettings',
    'RootSolveResult',
    'find_root',
    'solve_monotone_root',
    'central_difference',
]
