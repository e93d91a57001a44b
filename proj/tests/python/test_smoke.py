import numpy as np
import pytest

import wsgreedy as ws


def test_kmedian_greedy_extend():
    costs = np.array([[0.0, 5.0], [3.0, 1.0]])
    f = ws.KMedianObjective(costs)
    assert f.evaluate(ws.SolutionSet([0])) == 3.0
    result = ws.greedy_extend(f, ws.SolutionSet([0]), alpha=1.0, k=2, target_error=0.5)
    assert f.evaluate(result.solution) == 1.0
    oracle = ws.brute_force_min(f, k=2, n=2)
    assert oracle.optimum_value == 1.0


def test_kmeans_bicriteria_beats_oracle():
    rng = np.random.default_rng(0)
    points = rng.uniform(size=(10, 2))
    f = ws.kmeans_constrained_objective(points)
    init = ws.d2_adaptive_sample(points, k=2, beta=2.0, seed=7)
    opt = ws.brute_force_min(f, k=2, n=10).optimum_value
    rho = max(1.0, f.evaluate(init.solution) / opt)
    result = ws.bicriteria_solve(f, init.solution, rho=rho, k=2, alpha=1.0, epsilon=0.25)
    assert f.evaluate(result.solution) <= 1.25 * opt + 1e-9


def test_sparse_regress_planted():
    x = np.eye(6)
    y = np.zeros((6, 1))
    y[3, 0] = 2.0
    inst = ws.RegressionInstance(x, y)
    report = ws.sparse_regress(inst, target_error=0.01)
    assert 3 in report.result.solution.elements
    assert report.achieved_value <= 0.01
    assert report.coefficients[3] == pytest.approx(2.0)


def test_css_objective_and_alpha():
    x = np.eye(4)
    f = ws.css_objective(x)
    assert f.evaluate(ws.SolutionSet([0, 1])) == pytest.approx(2.0)
    inst = ws.RegressionInstance(x, x)
    assert ws.alpha_exact(inst, 4).alpha == pytest.approx(1.0)
    assert ws.alpha_spectral_bound(inst).alpha == pytest.approx(1.0)


def test_seed_determinism():
    rng = np.random.default_rng(3)
    points = rng.uniform(size=(12, 3))
    a = ws.d2_adaptive_sample(points, k=3, beta=2.0, seed=11)
    b = ws.d2_adaptive_sample(points, k=3, beta=2.0, seed=11)
    assert a.solution.elements == b.solution.elements
