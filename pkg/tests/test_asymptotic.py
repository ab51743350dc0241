"""
Test Suite for the Large-System Approximation
=============================================
Verifies the selection-gain moments, the secrecy-rate moments and the
ergodic / outage measures built on them.

Tests:
1. Threshold: tail residual on a grid, full selection, n_r = 1 closed form.
2. Selection moments: single-antenna reductions and full-selection values.
3. Secrecy moments: closed forms for a single receive antenna on 50-point
   grids, shrinking variance as the system grows, regime classification
   and the n_e == l_t warning.
4. Measures: clipped-Gaussian mean, lower bound, outage monotonicity and
   the zero-variance fallback.
"""

import math
import warnings

import numpy as np
import pytest

from wiretap.asymptotic import (
    AsymptoticMoments,
    eavesdropper_moments,
    ergodic_approx,
    lower_bound,
    main_rate_moments,
    outage_approx,
    regime,
    secrecy_moments,
    selection_moments,
    solve_threshold_u,
)
from wiretap.channel import SystemConfig
from wiretap.errors import (
    DegenerateVariance,
    DegenerateVarianceWarning,
    DomainError,
    NegativeVariance,
    UnsupportedRegimeWarning,
)
from wiretap.mathkit import upper_tail
from wiretap.optimization import example1_objective, example2_objective


def _moments(eta: float, sigma2: float) -> AsymptoticMoments:
    """Moments with the given (eta, sigma^2) and placeholder components."""
    return AsymptoticMoments(
        u=0.0, eta_t=1.0, sigma_t2=0.0, xi_t=0.0,
        eta_m=eta, sigma_m2=sigma2, eta_e=0.0, sigma_e2=0.0,
        eta=eta, sigma2=sigma2, l_m=1, m_m=1, l_e=1, m_e=1,
    )


class TestThreshold:
    """Chi-square threshold u."""

    @pytest.mark.parametrize("n_r", [1, 2, 4, 8])
    @pytest.mark.parametrize("n_t", [16, 128])
    def test_tail_residual(self, n_r, n_t):
        for l_t in range(1, n_t, max(1, n_t // 10)):
            cfg = SystemConfig(n_t=n_t, n_r=n_r, n_e=1, l_t=l_t, rho_m=1.0, rho_e=1.0)
            u = solve_threshold_u(cfg)
            assert u > 0
            assert abs(upper_tail(u, n_r) - l_t / n_t) <= 1e-10

    def test_full_selection(self):
        cfg = SystemConfig(n_t=32, n_r=3, n_e=1, l_t=32, rho_m=1.0, rho_e=1.0)
        assert solve_threshold_u(cfg) == 0.0

    @pytest.mark.parametrize("l_t", [1, 8, 18, 64, 127])
    def test_single_antenna_closed_form(self, l_t):
        cfg = SystemConfig(n_t=128, n_r=1, n_e=1, l_t=l_t, rho_m=1.0, rho_e=1.0)
        assert np.isclose(solve_threshold_u(cfg), math.log(128 / l_t), rtol=1e-11, atol=1e-11)

    def test_threshold_decreases_with_l_t(self):
        us = [solve_threshold_u(SystemConfig(64, 2, 1, l, 1.0, 1.0)) for l in range(1, 65)]
        assert all(a > b for a, b in zip(us, us[1:]))


class TestSelectionMoments:
    """Mean and variance of the selection gain."""

    @pytest.mark.parametrize("l_t", np.linspace(1, 128, 50).round().astype(int).tolist())
    def test_single_antenna_reduction(self, l_t):
        cfg = SystemConfig(n_t=128, n_r=1, n_e=1, l_t=int(l_t), rho_m=1.0, rho_e=1.0)
        eta_t, sigma_t2, _ = selection_moments(cfg)
        assert np.isclose(eta_t, l_t * (1 + math.log(128 / l_t)), rtol=1e-11, atol=1e-12)
        assert np.isclose(sigma_t2, l_t * (2 - l_t / 128), rtol=1e-10, atol=1e-9)

    @pytest.mark.parametrize("n_r", [1, 2, 3, 8])
    def test_full_selection(self, n_r):
        cfg = SystemConfig(n_t=20, n_r=n_r, n_e=1, l_t=20, rho_m=1.0, rho_e=1.0)
        eta_t, sigma_t2, _ = selection_moments(cfg)
        assert eta_t == n_r * 20
        assert sigma_t2 == n_r * 20

    def test_selection_beats_random_mean(self):
        # Strongest l_t columns have more energy than l_t random ones
        cfg = SystemConfig(n_t=128, n_r=2, n_e=1, l_t=16, rho_m=1.0, rho_e=1.0)
        eta_t, sigma_t2, _ = selection_moments(cfg)
        assert eta_t > 2 * 16
        assert sigma_t2 > 0

    def test_variance_non_negative_on_grid(self):
        for n_r in [1, 2, 4]:
            for n_t in [8, 32, 128]:
                for l_t in range(1, n_t + 1, max(1, n_t // 16)):
                    cfg = SystemConfig(n_t, n_r, 1, l_t, 1.0, 1.0)
                    assert selection_moments(cfg)[1] >= 0


class TestSecrecyMoments:
    """Gaussian moments of R*."""

    def test_components_combine(self, massive_config):
        m = secrecy_moments(massive_config)
        assert np.isclose(m.eta, m.eta_m - m.eta_e)
        assert np.isclose(m.sigma2, m.sigma_m2 + m.sigma_e2)
        assert np.isclose(m.sigma, math.sqrt(m.sigma2))
        assert (m.l_m, m.m_m, m.l_e, m.m_e) == (2, 16, 2, 16)

    def test_main_rate_moments_standalone(self, massive_config):
        m = secrecy_moments(massive_config)
        eta_m, sigma_m2 = main_rate_moments(massive_config)
        assert np.isclose(eta_m, m.eta_m, rtol=1e-14)
        assert np.isclose(sigma_m2, m.sigma_m2, rtol=1e-14)

    def test_eavesdropper_case_a(self):
        cfg = SystemConfig(n_t=128, n_r=1, n_e=2, l_t=16, rho_m=1.0, rho_e=0.1)
        eta_e, sigma_e2 = eavesdropper_moments(cfg)
        log2e_sq = 1 / math.log(2) ** 2
        assert np.isclose(eta_e, 2 * math.log2(1 + 0.1 * 16))
        assert np.isclose(sigma_e2, 2 * 16 * 0.01 / (1 + 1.6) ** 2 * log2e_sq)

    def test_eavesdropper_case_b(self):
        cfg = SystemConfig(n_t=128, n_r=1, n_e=16, l_t=4, rho_m=1.0, rho_e=0.1)
        eta_e, sigma_e2 = eavesdropper_moments(cfg)
        assert np.isclose(eta_e, 4 * math.log2(1 + 1.6))
        assert np.isclose(sigma_e2, 4 / 16 / math.log(2) ** 2)

    def test_example1_mean_reduction(self, example1_params):
        p = example1_params
        for l_t in [2, 10, 18, 40, 100]:
            cfg = SystemConfig(n_t=p['n_t'], n_r=1, n_e=1, l_t=l_t, rho_m=p['rho_m'], rho_e=p['rho_e'])
            expected = example1_objective(l_t, p['n_t'], p['rho_m'], p['rho_e'])
            assert np.isclose(secrecy_moments(cfg).eta, expected, rtol=1e-10)

    def test_example2_ergodic_reduction(self, example2_params):
        """Exact closed form agrees with the general approximation at integer l_t."""
        p = example2_params
        for l_t in [1, 4, 10, 14, 15]:
            cfg = SystemConfig(n_t=p['n_t'], n_r=1, n_e=p['n_e'], l_t=l_t,
                               rho_m=p['rho_m'], rho_e=p['rho_e'])
            closed = example2_objective(l_t, p['n_t'], p['n_e'], p['rho_m'], p['rho_e'])
            assert np.isclose(ergodic_approx(secrecy_moments(cfg)), closed, rtol=1e-9)

    @pytest.mark.parametrize("l_t", np.linspace(2, 128, 50).round().astype(int).tolist())
    def test_single_antenna_eavesdropper_reduction(self, l_t):
        """n_r = n_e = 1: mean and variance in closed form."""
        n_t, rho_m, rho_e = 128, 1.0, 0.1
        m = secrecy_moments(SystemConfig(n_t, 1, 1, l_t, rho_m, rho_e))
        gain = l_t * (1 + math.log(n_t / l_t))
        eta = math.log2((1 + rho_m * gain) / (1 + rho_e * l_t))
        sigma2 = (rho_m ** 2 * l_t * (2 - l_t / n_t) / (1 + rho_m * gain) ** 2
                  + rho_e ** 2 * l_t / (1 + rho_e * l_t) ** 2) / math.log(2) ** 2
        assert np.isclose(m.eta, eta, rtol=1e-11, atol=1e-12)
        assert np.isclose(m.sigma2, sigma2, rtol=1e-10, atol=1e-14)

    @pytest.mark.parametrize("l_t", np.linspace(1, 63, 50).round().astype(int).tolist())
    def test_large_eavesdropper_reduction(self, l_t, example2_params):
        """n_r = 1, n_e > l_t: mean and variance in closed form."""
        p = {**example2_params, 'n_e': 64}
        m = secrecy_moments(SystemConfig(p['n_t'], 1, p['n_e'], l_t, p['rho_m'], p['rho_e']))
        gain = l_t * (1 + math.log(p['n_t'] / l_t))
        eta = (math.log2(1 + p['rho_m'] * gain)
               - l_t * math.log2(1 + p['rho_e'] * p['n_e']))
        sigma2 = (p['rho_m'] ** 2 * l_t * (2 - l_t / p['n_t']) / (1 + p['rho_m'] * gain) ** 2
                  + l_t / p['n_e']) / math.log(2) ** 2
        assert np.isclose(m.eta, eta, rtol=1e-11, atol=1e-12)
        assert np.isclose(m.sigma2, sigma2, rtol=1e-10, atol=1e-14)

    def test_variance_vanishes_as_system_grows(self):
        """Doubling n_t and l_t together shrinks the secrecy-rate variance."""
        variances = [
            secrecy_moments(SystemConfig(n_t=32 * 2 ** k, n_r=2, n_e=2, l_t=4 * 2 ** k,
                                         rho_m=1.0, rho_e=1.0)).sigma2
            for k in range(4)
        ]
        assert np.all(np.diff(variances) < 0)
        assert variances[-1] < 0.5 * variances[0]

    @pytest.mark.parametrize("n_e,l_t,expected", [
        (2, 16, 'case_a'),
        (32, 16, 'case_b'),
        (16, 16, 'boundary'),
    ])
    def test_regime(self, n_e, l_t, expected):
        cfg = SystemConfig(n_t=128, n_r=2, n_e=n_e, l_t=l_t, rho_m=1.0, rho_e=0.1)
        assert regime(cfg) == expected

    def test_boundary_regime_warns(self):
        cfg = SystemConfig(n_t=128, n_r=2, n_e=8, l_t=8, rho_m=1.0, rho_e=0.1)
        with pytest.warns(UnsupportedRegimeWarning):
            m = secrecy_moments(cfg)
        assert np.isclose(m.sigma_e2, 1.0 / math.log(2) ** 2)

    def test_no_warning_off_boundary(self, massive_config):
        with warnings.catch_warnings():
            warnings.simplefilter("error")
            secrecy_moments(massive_config)

    def test_negative_variance_rejected(self):
        with pytest.raises(NegativeVariance):
            _moments(1.0, -0.5)


class TestErgodicApprox:
    """Mean of the clipped Gaussian."""

    def test_zero_mean_unit_variance(self):
        assert np.isclose(ergodic_approx(_moments(0.0, 1.0)), 0.3989422804014327, rtol=1e-12)

    def test_zero_variance(self):
        assert ergodic_approx(_moments(2.5, 0.0)) == 2.5
        assert ergodic_approx(_moments(-1.0, 0.0)) == 0.0

    @pytest.mark.parametrize("eta", [0.1, 0.5, 1.0, 3.0])
    def test_exceeds_lower_bound(self, eta):
        m = _moments(eta, 1.0)
        assert ergodic_approx(m) > lower_bound(m) == eta

    def test_large_ratio_approaches_mean(self):
        m = _moments(50.0, 1.0)
        assert ergodic_approx(m) >= lower_bound(m)
        assert np.isclose(ergodic_approx(m), 50.0, rtol=1e-12)

    def test_negative_mean_is_positive(self):
        m = _moments(-1.0, 1.0)
        assert lower_bound(m) == 0.0
        assert 0 < ergodic_approx(m) < 0.1

    def test_snr_sweep_tracks_lower_bound(self):
        """Approximation stays above [eta]^+ along the SNR sweep."""
        for rho_m_db in range(-8, 1):
            cfg = SystemConfig(16, 2, 2, 8, 10 ** (rho_m_db / 10), 10 ** -0.5)
            m = secrecy_moments(cfg)
            if m.eta > 0:
                assert ergodic_approx(m) > m.eta
            else:
                assert ergodic_approx(m) > 0


class TestOutageApprox:
    """Outage probability of the clipped Gaussian."""

    def test_median(self):
        assert np.isclose(outage_approx(_moments(1.0, 0.25), 1.0), 0.5)

    def test_three_sigma(self):
        assert np.isclose(outage_approx(_moments(1.0, 0.25), 1.0 + 3 * 0.5), 0.9986501019683699)

    def test_monotone_in_rate(self, massive_config):
        m = secrecy_moments(massive_config)
        values = [outage_approx(m, r) for r in np.linspace(0, 2 * abs(m.eta) + 3, 60)]
        assert all(b >= a for a, b in zip(values, values[1:]))
        assert all(0 <= v <= 1 for v in values)

    def test_negative_rate_rejected(self):
        with pytest.raises(DomainError):
            outage_approx(_moments(1.0, 1.0), -0.1)

    def test_zero_variance_step(self):
        m = _moments(2.0, 0.0)
        with pytest.warns(DegenerateVarianceWarning):
            assert outage_approx(m, 2.5) == 1.0
        with pytest.warns(DegenerateVarianceWarning):
            assert outage_approx(m, 1.5) == 0.0

    def test_zero_variance_strict(self):
        with pytest.raises(DegenerateVariance):
            outage_approx(_moments(2.0, 0.0), 1.0, strict=True)


if __name__ == "__main__":
    pytest.main([__file__])
