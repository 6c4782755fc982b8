import math

import numpy as np
import pytest

from fracvide.fracbasis import (
    basis_matrix,
    build_basis,
    default_error_grid,
    eval_basis,
    interpolate,
    lebesgue_constant,
    sup_norm,
    weighted_l2_norm,
)


def test_degree_zero_basis_is_constant_one():
    b = build_basis(0, -0.5, -0.5, 0.5)
    assert len(b.nodes) == 1
    for theta in (0.0, 0.31, 1.0):
        assert eval_basis(b, 0, theta) == pytest.approx(1.0, abs=1e-15)


def test_lambda_one_z_equals_nodes():
    b = build_basis(4, -0.5, -0.5, 1.0)
    assert b.z_nodes == pytest.approx(b.nodes, abs=0)


def test_fractional_nodes_are_powers_of_classical():
    b1 = build_basis(4, -0.5, -0.5, 1.0)
    b2 = build_basis(4, -0.5, -0.5, 0.5)
    assert b2.nodes == pytest.approx(b1.nodes ** 2, rel=1e-14)


@pytest.mark.parametrize("lam", [1.0, 0.5, 1 / 3])
@pytest.mark.parametrize("n", [1, 2, 4, 8, 16, 32])
def test_kronecker_property(n, lam):
    b = build_basis(n, -0.5, -0.5, lam)
    mat = basis_matrix(b, b.nodes)
    assert np.max(np.abs(mat - np.eye(n + 1))) <= 1e-12


@pytest.mark.parametrize("lam", [1.0, 0.5, 1 / 3])
@pytest.mark.parametrize("n", [1, 4, 16, 32])
def test_partition_of_unity(n, lam):
    b = build_basis(n, -0.5, -0.5, lam)
    grid = np.linspace(0.0, 1.0, 211)
    sums = basis_matrix(b, grid).sum(axis=1)
    assert np.max(np.abs(sums - 1.0)) <= 1e-10


def test_partition_of_unity_single_point():
    b = build_basis(6, -0.5, -0.5, 0.5)
    total = sum(eval_basis(b, j, 0.37) for j in range(7))
    assert total == pytest.approx(1.0, abs=1e-12)


def test_interpolate_reproduces_theta_lam():
    rng = np.random.default_rng(7)
    for n in (1, 3, 9):
        b = build_basis(n, -0.5, -0.5, 0.5)
        vals = b.nodes ** b.lam
        for theta in rng.uniform(0.0, 1.0, 20):
            assert interpolate(b, vals, float(theta)) == pytest.approx(theta ** b.lam, abs=1e-12)


def test_interpolate_constant():
    b = build_basis(5, -0.5, -0.5, 1 / 3)
    vals = np.full(6, 2.75)
    for theta in (0.0, 0.2, 0.9):
        assert interpolate(b, vals, theta) == pytest.approx(2.75, abs=1e-12)


def test_interpolate_quadratic_in_z():
    lam = 0.5
    p = lambda t: 3.0 - 2.0 * t ** lam + t ** (2 * lam)
    b = build_basis(2, -0.5, -0.5, lam)
    vals = np.array([p(t) for t in b.nodes])
    for theta in np.linspace(0.0, 1.0, 17):
        assert interpolate(b, vals, float(theta)) == pytest.approx(p(theta), abs=1e-13)


def test_interpolate_analytic_function_spectral():
    # interpolation of exp on 17 Gauss points is accurate to roundoff
    b = build_basis(16, -0.5, -0.5, 1.0)
    vals = np.exp(b.nodes)
    grid = np.linspace(0.0, 1.0, 2000)
    err = np.max(np.abs(basis_matrix(b, grid) @ vals - np.exp(grid)))
    assert err <= 1e-12


def test_interpolate_exact_on_lambda_polynomials():
    rng = np.random.default_rng(42)
    for lam in (1.0, 0.5, 1 / 3):
        for n in (1, 2, 5, 11, 32):
            b = build_basis(n, -0.5, -0.5, lam)
            coef = rng.uniform(-1.0, 1.0, n + 1)
            f = lambda t: np.polynomial.polynomial.polyval(t ** lam, coef)
            vals = f(b.nodes)
            grid = np.linspace(0.0, 1.0, 300)
            err = np.max(np.abs(basis_matrix(b, grid) @ vals - f(grid)))
            assert err <= 1e-11 * max(1.0, np.max(np.abs(coef)))


def test_interpolate_at_nodes_returns_values():
    b = build_basis(7, -0.5, -0.5, 0.5)
    vals = np.sin(3.0 * b.nodes)
    for j, t in enumerate(b.nodes):
        assert interpolate(b, vals, float(t)) == vals[j]


def test_interpolate_rejects_wrong_length():
    b = build_basis(3, -0.5, -0.5, 1.0)
    with pytest.raises(ValueError):
        interpolate(b, np.zeros(3), 0.5)


def test_lebesgue_degree_zero():
    b = build_basis(0, -0.5, -0.5, 1.0)
    assert lebesgue_constant(b, 50) == pytest.approx(1.0, abs=1e-15)


def test_lebesgue_log_growth_band():
    for n in (4, 8, 16, 32, 64):
        b = build_basis(n, -0.5, -0.5, 1.0)
        lam_n = lebesgue_constant(b, max(2000, 10 * (n + 1)))
        assert lam_n / math.log(n) <= 3.0
        assert lam_n >= 1.0


def test_lebesgue_positive_parameters_grow_faster():
    small = lebesgue_constant(build_basis(32, -0.5, -0.5, 1.0), 2000)
    large = lebesgue_constant(build_basis(32, 0.5, 0.5, 1.0), 2000)
    assert large > small


def test_lebesgue_grid_precondition():
    b = build_basis(8, -0.5, -0.5, 1.0)
    with pytest.raises(ValueError):
        lebesgue_constant(b, 50)


def test_weighted_l2_norm_zero():
    assert weighted_l2_norm(lambda t: 0.0, -0.5, -0.5, 1.0) == 0.0


def test_weighted_l2_norm_chebyshev_weight():
    # integral of (1-t)^-1/2 t^-1/2 over [0,1] is B(1/2,1/2) = pi
    val = weighted_l2_norm(lambda t: 1.0, -0.5, -0.5, 1.0)
    assert val == pytest.approx(math.sqrt(math.pi), rel=1e-13)


def test_weighted_l2_norm_linear():
    val = weighted_l2_norm(lambda t: t, 0.0, 0.0, 1.0)
    assert val == pytest.approx(1.0 / math.sqrt(3.0), rel=1e-13)


def test_weighted_l2_norm_saturation():
    f = lambda t: 1.0 - 3.0 * t + 0.5 * t ** 4
    a = weighted_l2_norm(f, -0.5, -0.5, 1.0, m_points=200)
    b = weighted_l2_norm(f, -0.5, -0.5, 1.0, m_points=400)
    assert abs(a - b) <= 1e-10 * abs(b)


def test_sup_norm_zero():
    assert sup_norm(lambda t: 0.0) == 0.0


def test_sup_norm_parabola():
    assert sup_norm(lambda t: t * (1.0 - t)) == pytest.approx(0.25, abs=1e-6)


def test_sup_norm_dense_grid_bound():
    val = sup_norm(lambda t: math.sin(10.0 * t))
    assert 0.999 <= val <= 1.0


def test_sup_norm_empty_grid():
    with pytest.raises(ValueError):
        sup_norm(lambda t: t, grid=np.array([]))


def test_default_error_grid_contains_nodes():
    b = build_basis(5, -0.5, -0.5, 0.5)
    grid = default_error_grid(b)
    assert np.all(np.isin(b.nodes, grid))
    assert grid[0] == 0.0 and grid[-1] == 1.0
