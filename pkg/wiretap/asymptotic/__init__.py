"""
Asymptotic Module
=================
Large-system Gaussian approximation of the secrecy rate under antenna
selection, and the ergodic / outage measures derived from it.

Usage:
    from wiretap.channel import SystemConfig
    from wiretap.asymptotic import secrecy_moments, ergodic_approx, outage_approx

    cfg = SystemConfig(n_t=128, n_r=2, n_e=2, l_t=16, rho_m=1.0, rho_e=0.1)
    moments = secrecy_moments(cfg)
    print(ergodic_approx(moments), outage_approx(moments, r_out=1.0))
"""

from wiretap.asymptotic.moments import (
    AsymptoticMoments,
    regime,
    solve_threshold_u,
    selection_moments,
    eavesdropper_moments,
    main_rate_moments,
    secrecy_moments,
)
from wiretap.asymptotic.measures import ergodic_approx, outage_approx, lower_bound

__all__ = [
    'AsymptoticMoments',
    'regime',
    'solve_threshold_u',
    'selection_moments',
    'eavesdropper_moments',
    'main_rate_moments',
    'secrecy_moments',
    'ergodic_approx',
    'outage_approx',
    'lower_bound',
]
