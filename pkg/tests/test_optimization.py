"""
Test Suite for Antenna-Count Optimization
=========================================

Tests:
1. Example 1 fixed point: optimum, boundary case, unimodality of the mean.
2. Example 2 stationary point: optimum, residual, fallback agreement,
   variance forms, decreasing tail.
3. Rounding of a continuous optimum to an antenna count.
4. Grid optimizer: reference scenarios, tie-breaking, objectives, verbose output.
"""

import math

import numpy as np
import pytest
from scipy.optimize import brentq

from wiretap.channel import SystemConfig
from wiretap.errors import ConfigurationError, DomainError, MissingThreshold
from wiretap.optimization import (
    ErgodicObjective,
    GridOptimizer,
    ObjectiveFunction,
    OptimizationMethod,
    OutageObjective,
    example1_fixed_point,
    example1_objective,
    example2_objective,
    example2_slope,
    example2_stationary,
    make_objective,
    optimal_lt_grid,
)
from wiretap.optimization.closed_form import _round_to_best_neighbour


class ConstantObjective(ObjectiveFunction):
    """Same value for every configuration."""

    def evaluate(self, cfg):
        return 1.0

    @property
    def name(self):
        return "Constant"


class TestExample1:
    """Single receive and eavesdropper antenna."""

    def test_optimum(self, example1_params):
        result = example1_fixed_point(**example1_params)
        assert 18.35 <= result.x_star <= 18.45
        assert result.l_star == 18
        assert result.method is OptimizationMethod.EXAMPLE1_FIXED_POINT
        assert not result.boundary

    def test_stationarity(self, example1_params):
        p = example1_params
        x = example1_fixed_point(**p).x_star
        g = p['rho_e'] * x + math.log(x) + p['rho_e'] / p['rho_m'] - math.log(p['n_t'])
        assert abs(g) <= 1e-10

    def test_objective_at_l_star(self, example1_params):
        result = example1_fixed_point(**example1_params)
        assert np.isclose(result.objective_at_l_star,
                          example1_objective(18, **example1_params))

    def test_boundary_when_mean_decreasing(self):
        # ln(4) < rho_e + rho_e / rho_m
        result = example1_fixed_point(n_t=4, rho_m=1.0, rho_e=1.0)
        assert result.l_star == 1
        assert result.boundary

    def test_single_antenna(self):
        assert example1_fixed_point(n_t=1, rho_m=1.0, rho_e=0.1).l_star == 1

    def test_mean_is_unimodal(self, example1_params):
        """Increasing up to the fixed point, decreasing after it."""
        values = [example1_objective(x, **example1_params) for x in range(1, 129)]
        steps = np.diff(values)
        assert np.all(steps[:17] > 0)
        assert np.all(steps[17:] < 0)

    def test_mean_concave_near_optimum(self, example1_params):
        xs = np.linspace(1.0, 40.0, 200)
        values = np.array([example1_objective(x, **example1_params) for x in xs])
        assert np.all(np.diff(values, 2) <= 1e-12)

    def test_objective_domain(self, example1_params):
        with pytest.raises(DomainError):
            example1_objective(0.0, **example1_params)

    def test_invalid_snr(self):
        with pytest.raises(ConfigurationError):
            example1_fixed_point(n_t=128, rho_m=-1.0, rho_e=0.1)


class TestExample2:
    """Single receive antenna, large eavesdropper array."""

    def test_optimum(self, example2_params):
        result = example2_stationary(**example2_params)
        assert 13.6 <= result.x_star <= 13.8
        assert result.l_star == 14
        assert result.method is OptimizationMethod.EXAMPLE2_STATIONARY
        assert not result.fallback

    def test_stationary_residual(self, example2_params):
        x = example2_stationary(**example2_params).x_star
        assert abs(example2_slope(x, **example2_params)) <= 1e-8

    def test_slope_matches_objective_derivative(self, example2_params):
        for x in [3.0, 13.0, 40.0]:
            h = 1e-5
            numeric = (example2_objective(x + h, **example2_params)
                       - example2_objective(x - h, **example2_params)) / (2 * h)
            assert np.isclose(example2_slope(x, **example2_params), numeric, rtol=1e-5, atol=1e-9)

    def test_fallback_agrees(self, example2_params):
        root = example2_stationary(**example2_params)
        scalar = example2_stationary(**example2_params, force_fallback=True)
        assert scalar.fallback
        assert abs(root.x_star - scalar.x_star) <= 1e-3
        assert root.l_star == scalar.l_star

    def test_zero_mean_point(self, example2_params):
        """Where f(x) = 0 the objective is phi(0) * s(x)."""
        p = example2_params

        def mean(x):
            return (math.log2(1 + p['rho_m'] * x * (1 + math.log(p['n_t'] / x)))
                    - x * math.log2(1 + p['rho_e'] * p['n_e']))

        x0 = brentq(mean, 20.0, 128.0)
        s = math.sqrt((p['rho_m'] ** 2 * x0 * (2 - x0 / p['n_t']) / (1 + p['rho_m'] * x0 * (1 + math.log(p['n_t'] / x0))) ** 2
                       + x0 / p['n_e'])) / math.log(2)
        assert np.isclose(example2_objective(x0, **p), 0.3989422804014327 * s, rtol=1e-8)

    def test_objective_decreasing_beyond_optimum(self, example2_params):
        x_star = example2_stationary(**example2_params).x_star
        xs = np.linspace(x_star, example2_params['n_t'], 400)
        values = np.array([example2_objective(x, **example2_params) for x in xs])
        assert np.all(np.diff(values) <= 1e-12)

    def test_printed_variance_form(self, example2_params):
        result = example2_stationary(**example2_params, variance_form='printed')
        assert 1 <= result.l_star <= example2_params['n_t']
        assert np.isclose(result.objective_at_l_star,
                          example2_objective(result.l_star, **example2_params, variance_form='printed'))

    def test_unknown_variance_form(self, example2_params):
        with pytest.raises(ConfigurationError):
            example2_objective(4.0, **example2_params, variance_form='other')

    def test_grid_agrees(self, example2_params):
        p = example2_params
        template = SystemConfig(n_t=p['n_t'], n_r=1, n_e=p['n_e'], l_t=1,
                                rho_m=p['rho_m'], rho_e=p['rho_e'])
        with pytest.warns(Warning):
            grid = optimal_lt_grid(template)
        assert grid.l_star == example2_stationary(**p).l_star == 14


class TestNeighbourRounding:
    """Continuous optimum to antenna count."""

    def test_half_rounds_up_on_equal_objective(self):
        assert _round_to_best_neighbour(2.5, 10, lambda x: 1.0) == (3, 1.0)

    def test_nearest_kept_on_equal_objective(self):
        assert _round_to_best_neighbour(2.4, 10, lambda x: 1.0)[0] == 2
        assert _round_to_best_neighbour(2.6, 10, lambda x: 1.0)[0] == 3

    def test_better_neighbour_wins(self):
        assert _round_to_best_neighbour(2.4, 10, lambda x: x)[0] == 3

    def test_clamped_to_antenna_range(self):
        assert _round_to_best_neighbour(0.6, 10, lambda x: -x)[0] == 1
        assert _round_to_best_neighbour(10.0, 10, lambda x: x)[0] == 10


class TestGridOptimizer:
    """Exhaustive l_t scan."""

    def test_single_antenna_eavesdropper_scenario(self):
        template = SystemConfig(n_t=128, n_r=1, n_e=1, l_t=1, rho_m=1.0, rho_e=0.1)
        result = optimal_lt_grid(template)
        assert result.l_star == 18
        assert result.method is OptimizationMethod.GRID
        assert len(result.all_evaluations) == 128

    def test_interior_optimum_multi_antenna(self):
        template = SystemConfig(n_t=128, n_r=2, n_e=8, l_t=1, rho_m=1.0, rho_e=0.1)
        with pytest.warns(Warning):
            result = optimal_lt_grid(template)
        assert 1 < result.l_star < 128
        assert not result.boundary

    def test_weak_eavesdropper_selects_all(self):
        template = SystemConfig(n_t=16, n_r=2, n_e=2, l_t=1, rho_m=1.0, rho_e=1e-12)
        result = optimal_lt_grid(template)
        assert result.l_star == 16
        assert result.boundary

    def test_ties_resolve_to_smaller(self, small_config):
        result = GridOptimizer().optimize(ConstantObjective(), small_config)
        assert result.l_star == 1

    def test_outage_objective(self, massive_config):
        result = optimal_lt_grid(massive_config, 'outage', r_out=1.0)
        assert 1 <= result.l_star <= 128
        assert 0.0 <= result.objective_at_l_star <= 1.0

    def test_outage_requires_threshold(self, massive_config):
        with pytest.raises(MissingThreshold):
            optimal_lt_grid(massive_config, 'outage')

    def test_unknown_objective(self):
        with pytest.raises(ConfigurationError):
            make_objective('median')

    def test_make_objective(self):
        assert isinstance(make_objective('ergodic'), ErgodicObjective)
        assert isinstance(make_objective('outage', r_out=0.5), OutageObjective)

    def test_verbose_banner(self, small_config, capsys):
        GridOptimizer().optimize(ErgodicObjective(), small_config, verbose=True)
        out = capsys.readouterr().out
        assert "Optimization Complete" in out
        assert "Optimal l_t" in out


if __name__ == "__main__":
    pytest.main([__file__])
