"""Tests for the kernel family and the continuous form"""

import math

import numpy as np
import pytest

from src.kernel import (
    AlphaParam,
    QuadratureBudget,
    adaptive_simpson,
    continuous_extremal_ratio,
    continuous_norm_quadrature,
    extremal_decomposition,
    extremal_ratio_by_quadrature,
    i_alpha,
    kernel_eval,
    kernel_values,
    power_integral,
)
from src.utils.exceptions import AccuracyError, DomainError, PreconditionError


@pytest.fixture
def rng():
    """Seeded generator for random kernel points"""
    return np.random.default_rng(7)


@pytest.mark.parametrize("value", [0.0, -1.0, math.inf, math.nan])
def test_alpha_param_invalid(value):
    """Test AlphaParam rejects non-positive and non-finite values"""
    with pytest.raises(DomainError):
        AlphaParam(alpha=value)


def test_alpha_param_coerce():
    """Test AlphaParam.coerce passes instances through"""
    param = AlphaParam(alpha=1.5)
    assert AlphaParam.coerce(param) is param
    assert AlphaParam.coerce(2).alpha == 2.0
    assert float(param) == 1.5


@pytest.mark.parametrize("alpha", [0.3, 1.0, 2.5])
@pytest.mark.parametrize("t", [0.5, 1.0, 7.0])
def test_kernel_diagonal(alpha, t):
    """Test K_alpha(t, t) = 1/t"""
    assert kernel_eval(alpha, t, t) == pytest.approx(1.0 / t, rel=1e-14)


def test_kernel_half_is_one_over_max():
    """Test the alpha = 1/2 kernel reduces to 1/max"""
    for m in range(1, 6):
        for n in range(1, 6):
            assert kernel_eval(0.5, m, n) == pytest.approx(1.0 / max(m, n), rel=1e-15)


def test_kernel_example():
    """Test K_1(2, 1) = sqrt(2)/4"""
    assert kernel_eval(1.0, 2.0, 1.0) == pytest.approx(math.sqrt(2.0) / 4.0, rel=1e-14)


def test_kernel_symmetry(rng):
    """Test K_alpha(x, y) and K_alpha(y, x) agree bit for bit"""
    for x, y in rng.uniform(0.01, 100.0, size=(50, 2)):
        for alpha in (0.25, 1.0, 3.0):
            assert kernel_eval(alpha, x, y) == kernel_eval(alpha, y, x)


@pytest.mark.parametrize("scale", [0.5, 2.0, 10.0])
def test_kernel_homogeneity(rng, scale):
    """Test scale * K(scale x, scale y) = K(x, y)"""
    for x, y in rng.uniform(0.01, 100.0, size=(20, 2)):
        expected = kernel_eval(1.3, x, y)
        assert scale * kernel_eval(1.3, scale * x, scale * y) == pytest.approx(
            expected, rel=1e-12
        )


def test_kernel_domain():
    """Test nonpositive points are rejected"""
    with pytest.raises(DomainError):
        kernel_eval(1.0, 0.0, 1.0)
    with pytest.raises(DomainError):
        kernel_eval(1.0, 1.0, -2.0)
    with pytest.raises(DomainError):
        kernel_values(1.0, np.array([1.0, 0.0]), np.array([1.0]))


def test_kernel_values_matches_scalar():
    """Test the vectorised kernel against kernel_eval"""
    rows = np.array([1.0, 2.0, 5.0])
    cols = np.array([0.5, 3.0])
    grid = kernel_values(0.7, rows, cols)
    assert grid.shape == (3, 2)
    for i, x in enumerate(rows):
        for j, y in enumerate(cols):
            assert grid[i, j] == pytest.approx(kernel_eval(0.7, x, y), rel=1e-14)


def test_i_alpha():
    """Test the closed form of the Poisson-type integral"""
    assert i_alpha(1.7, 1.0) == 1.0
    assert i_alpha(2.0, 3.0) == pytest.approx(1.0 / 9.0)
    assert i_alpha(0.8, 4.0) == pytest.approx(i_alpha(0.8, 0.25))
    with pytest.raises(DomainError):
        i_alpha(1.0, 0.0)


@pytest.mark.parametrize("alpha", [0.25, 0.5, 1.0, 1.5, 2.0, 4.0])
def test_continuous_norm_quadrature(alpha):
    """Test the quadrature of C_alpha reproduces 2/alpha"""
    value = continuous_norm_quadrature(alpha, QuadratureBudget(tol=1e-8))
    assert abs(value - 2.0 / alpha) <= 1e-8


def test_power_integral():
    """Test power_integral against 1/(e+1)"""
    assert power_integral(2.0) == pytest.approx(1.0 / 3.0, abs=1e-10)
    assert power_integral(-0.75) == pytest.approx(4.0, abs=1e-10)
    with pytest.raises(DomainError):
        power_integral(-1.0)


def test_adaptive_simpson_exhausted():
    """Test the quadrature reports its best estimate when the depth runs out"""
    budget = QuadratureBudget(tol=1e-14, max_refinements=2)
    with pytest.raises(AccuracyError) as excinfo:
        adaptive_simpson(math.sqrt, 0.0, 1.0, budget)
    assert excinfo.value.best_estimate == pytest.approx(2.0 / 3.0, abs=1e-2)


def test_extremal_ratio_increasing():
    """Test the extremal ratio increases toward 2/alpha as eps shrinks"""
    ratios = [continuous_extremal_ratio(1.0, eps) for eps in (0.1, 0.01, 0.001)]
    assert ratios[0] < ratios[1] < ratios[2] < 2.0
    assert ratios[2] == pytest.approx(2.0, abs=1e-2)


@pytest.mark.parametrize("alpha", [0.5, 1.0, 2.0])
def test_extremal_ratio_halving(alpha):
    """Test monotone convergence on eps = alpha/2**j"""
    ratios = [continuous_extremal_ratio(alpha, alpha / 2 ** j) for j in range(1, 11)]
    assert all(b > a for a, b in zip(ratios, ratios[1:]))
    assert all(r < 2.0 / alpha for r in ratios)


@pytest.mark.parametrize("eps", [2.0, 0.0, 3.0])
def test_extremal_ratio_eps_out_of_range(eps):
    """Test eps outside (0, alpha) is a precondition violation"""
    with pytest.raises(PreconditionError):
        continuous_extremal_ratio(2.0, eps)


def test_extremal_ratio_quadrature_cross_check():
    """Test the closed form against quadrature at alpha = 1/2, eps = 1/4"""
    closed = continuous_extremal_ratio(0.5, 0.25)
    assert closed <= 4.0
    assert extremal_ratio_by_quadrature(0.5, 0.25) == pytest.approx(closed, abs=1e-6)


def test_extremal_decomposition():
    """Test the leading and constant parts recombine to the form value"""
    result = extremal_decomposition(1.0, 0.2)
    assert result.norm_squared == pytest.approx(2.5)
    assert result.form_value == pytest.approx(1.0 / (0.2 * 1.2))
    assert result.ratio == pytest.approx(continuous_extremal_ratio(1.0, 0.2))
    assert result.constant < 0
    assert set(result.to_dict()) >= {"leading", "constant", "ratio"}
