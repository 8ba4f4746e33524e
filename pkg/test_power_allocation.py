#!/usr/bin/env python3
"""
Tests for the water-filling and min-power allocation solvers
"""

import sys
import os
sys.path.insert(0, os.path.join(os.path.dirname(__file__), 'src'))

import numpy as np
import pytest
from numpy.testing import assert_allclose
from scipy.optimize import minimize_scalar

from core.errors import ConfigurationError, InfeasibleMseCapError
from precoding.power_allocation import allocation_mse, solve_minpower_mse, solve_waterfill_mse


def test_waterfill_two_streams_closed_form():
    alloc = solve_waterfill_mse([2.0, 1.0], noise_var=1.0, budget=2.0)
    assert_allclose(alloc.p, [5 / 6, 7 / 6], atol=1e-10)
    assert_allclose(alloc.consumed, 2.0, atol=1e-12)
    assert alloc.residual == pytest.approx(0.0, abs=1e-12)
    assert alloc.dual == pytest.approx(36 / 169, rel=1e-9)


def test_waterfill_equal_gains_split_evenly():
    alloc = solve_waterfill_mse(np.ones(4), noise_var=0.5, budget=3.0)
    assert_allclose(alloc.p, 0.75, atol=1e-10)


def test_waterfill_switches_off_weak_streams():
    alloc = solve_waterfill_mse([10.0, 0.1], noise_var=1.0, budget=0.5)
    assert alloc.p[1] == 0.0
    assert alloc.p[0] == pytest.approx(0.5, abs=1e-10)


def test_waterfill_zero_budget():
    alloc = solve_waterfill_mse([1.0, 2.0], noise_var=1.0, budget=0.0)
    assert_allclose(alloc.p, 0.0)
    assert alloc.consumed == 0.0


def test_waterfill_all_zero_gains():
    alloc = solve_waterfill_mse([0.0, 0.0], noise_var=1.0, budget=4.0)
    assert_allclose(alloc.p, 0.0)
    assert alloc.residual == 4.0


def test_waterfill_rejects_bad_input():
    with pytest.raises(ConfigurationError):
        solve_waterfill_mse([1.0, -1.0], noise_var=1.0, budget=1.0)
    with pytest.raises(ConfigurationError):
        solve_waterfill_mse([1.0], noise_var=0.0, budget=1.0)
    with pytest.raises(ConfigurationError):
        solve_waterfill_mse([], noise_var=1.0, budget=1.0)


def test_waterfill_matches_line_search_on_two_streams():
    rng = np.random.default_rng(10)
    for _ in range(100):
        sigma = rng.uniform(0.05, 3.0, 2)
        noise_var = rng.uniform(0.1, 2.0)
        budget = rng.uniform(0.01, 10.0)

        alloc = solve_waterfill_mse(sigma, noise_var, budget)
        best = minimize_scalar(lambda p0: allocation_mse(sigma, [p0, budget - p0], noise_var),
                               bounds=(0.0, budget), method='bounded', options={'xatol': 1e-10})
        assert allocation_mse(sigma, alloc.p, noise_var) <= best.fun + 1e-9
        assert_allclose(alloc.p, [best.x, budget - best.x], atol=1e-4)


def test_waterfill_satisfies_kkt_conditions():
    rng = np.random.default_rng(11)
    for _ in range(100):
        n = rng.integers(1, 7)
        sigma = rng.uniform(0.0, 3.0, n)
        sigma[0] = max(sigma[0], 0.1)
        noise_var = rng.uniform(0.1, 2.0)
        budget = rng.uniform(0.01, 20.0)

        alloc = solve_waterfill_mse(sigma, noise_var, budget)
        assert np.all(alloc.p >= 0)
        assert alloc.consumed == pytest.approx(budget, rel=1e-9)

        # marginal MSE reduction is equal on active streams and no larger elsewhere
        grad = sigma ** 2 * noise_var / (sigma ** 2 * alloc.p + noise_var) ** 2
        active = alloc.p > 1e-12
        assert_allclose(grad[active], alloc.dual, rtol=1e-6)
        assert np.all(grad[~active] <= alloc.dual * (1 + 1e-6))


def test_minpower_single_stream():
    alloc = solve_minpower_mse([1.0], noise_var=1.0, budget=5.0, mse_cap=0.5)
    assert_allclose(alloc.p, [1.0], atol=1e-10)
    assert alloc.residual == pytest.approx(4.0, abs=1e-10)


def test_minpower_two_streams_closed_form():
    alloc = solve_minpower_mse([2.0, 1.0], noise_var=1.0, budget=10.0, mse_cap=0.8)
    assert_allclose(alloc.p, [0.6875, 0.875], atol=1e-10)
    assert allocation_mse([2.0, 1.0], alloc.p, 1.0) == pytest.approx(0.8, abs=1e-10)
    assert alloc.residual == pytest.approx(10.0 - 1.5625, abs=1e-10)


def test_minpower_loose_cap_needs_no_power():
    alloc = solve_minpower_mse([1.0, 1.0], noise_var=1.0, budget=3.0, mse_cap=2.0)
    assert_allclose(alloc.p, 0.0)
    assert alloc.residual == 3.0


def test_minpower_infeasible_cap():
    with pytest.raises(InfeasibleMseCapError) as excinfo:
        solve_minpower_mse([1.0], noise_var=1.0, budget=0.5, mse_cap=0.5)
    assert excinfo.value.best_mse == pytest.approx(2 / 3, rel=1e-9)
    assert excinfo.value.mse_cap == 0.5


def test_minpower_rejects_non_positive_cap():
    with pytest.raises(ConfigurationError):
        solve_minpower_mse([1.0], noise_var=1.0, budget=1.0, mse_cap=0.0)


def test_minpower_meets_cap_with_equality():
    rng = np.random.default_rng(12)
    for _ in range(100):
        n = rng.integers(1, 7)
        sigma = rng.uniform(0.1, 3.0, n)
        noise_var = rng.uniform(0.1, 2.0)
        budget = 1e7
        cap = rng.uniform(0.05, n - 0.05)

        alloc = solve_minpower_mse(sigma, noise_var, budget, cap)
        assert allocation_mse(sigma, alloc.p, noise_var) == pytest.approx(cap, rel=1e-8)
        assert alloc.consumed <= budget
        assert alloc.residual == pytest.approx(budget - alloc.consumed)


def test_minpower_matches_line_search_on_two_streams():
    rng = np.random.default_rng(13)
    for _ in range(100):
        sigma = rng.uniform(0.1, 3.0, 2)
        noise_var = rng.uniform(0.1, 2.0)
        cap = rng.uniform(0.1, 1.9)

        def total_power(p0):
            # least p1 that keeps the summed MSE at the cap for this p0
            slack = cap - noise_var / (sigma[0] ** 2 * p0 + noise_var)
            if slack >= 1.0:
                return p0
            return p0 + noise_var * (1.0 / slack - 1.0) / sigma[1] ** 2

        if cap > 1.0:
            lo = 0.0
            hi = noise_var * (1.0 / (cap - 1.0) - 1.0) / sigma[0] ** 2
        else:
            lo = noise_var * (1.0 / cap - 1.0) / sigma[0] ** 2 * (1 + 1e-9) + 1e-12
            hi = lo + 1e6
        best = minimize_scalar(total_power, bounds=(lo, hi), method='bounded',
                               options={'xatol': 1e-10, 'maxiter': 2000})

        alloc = solve_minpower_mse(sigma, noise_var, 1e7, cap)
        assert alloc.consumed <= best.fun * (1 + 1e-9) + 1e-9
        assert alloc.consumed == pytest.approx(best.fun, rel=1e-5, abs=1e-6)


def test_waterfill_mse_falls_as_budget_grows():
    sigma = np.array([2.0, 1.3, 0.7, 0.2])
    mses = [allocation_mse(sigma, solve_waterfill_mse(sigma, 1.0, budget).p, 1.0)
            for budget in (0.5, 1.0, 4.0, 16.0, 64.0)]
    assert all(b < a for a, b in zip(mses, mses[1:]))


def test_minpower_consumption_grows_as_cap_tightens():
    sigma = np.array([2.0, 1.3, 0.7, 0.2])
    consumed = [solve_minpower_mse(sigma, 1.0, budget=1e7, mse_cap=cap).consumed
                for cap in (3.5, 2.0, 1.0, 0.5, 0.2)]
    assert all(b > a for a, b in zip(consumed, consumed[1:]))
