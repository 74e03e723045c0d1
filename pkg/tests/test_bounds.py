"""Tests for the majorant, the closed-form estimates and the norm bounds"""

import math

import mpmath
import numpy as np
import pytest

from src.bounds import (
    BoundReport,
    LemmaEstimate,
    LowerMethod,
    composition_bounds,
    conformal_map,
    disc_bounds,
    embedding_constant_bounds,
    h1,
    h2,
    improved_lower_bound,
    lemma4_estimate,
    majorant_components,
    mobius,
    restated_factor_check,
    s_alpha,
    s_alpha_sup,
    sandwich_gaps,
    theorem_bounds,
    transfer_alpha_r,
)
from src.bounds.majorant import LIMIT
from src.kernel import AlphaParam
from src.roots import alpha_zero
from src.special import PowerSumSpec, em_partial_sum, zeta
from src.special.zeta import direct_sum
from src.utils.exceptions import (
    DivergenceError,
    DomainError,
    InvariantViolationError,
    PreconditionError,
)

ZETA_2 = math.pi ** 2 / 6.0
ZETA_4 = math.pi ** 4 / 90.0


@pytest.mark.parametrize("alpha", [0.3, 0.7, 1.0, 1.5, 2.0, 3.0])
def test_s_alpha_first_row(alpha):
    """Test S_alpha(1) = zeta(1 + alpha)"""
    assert abs(s_alpha(alpha, 1, tol=1e-10) - zeta(1.0 + alpha)) <= 2e-10


def test_s_alpha_second_row():
    """Test S_1(2) = 1 + 2 (zeta(2) - 5/4)"""
    expected = 1.0 + 2.0 * (ZETA_2 - 1.25)
    assert s_alpha(1.0, 2) == pytest.approx(expected, abs=1e-9)
    assert expected == pytest.approx(1.789868, abs=1e-6)


@pytest.mark.slow
def test_s_alpha_limit():
    """Test S_1(m) approaches 2 for large m"""
    assert abs(s_alpha(1.0, 10 ** 6) - 2.0) <= 1e-4


def test_majorant_components_match_s_alpha():
    """Test the vectorised components agree with s_alpha row by row"""
    head, tail = majorant_components(1.5, 200)
    for m in (1, 2, 3, 50, 200):
        assert head[m - 1] + tail[m - 1] == pytest.approx(s_alpha(1.5, m), abs=1e-9)


@pytest.mark.parametrize("alpha", [0.5, 0.9, 1.0])
def test_majorant_nondecreasing_small_alpha(alpha):
    """Test S_alpha is nondecreasing in m for alpha <= 1"""
    head, tail = majorant_components(alpha, 1000)
    assert np.all(np.diff(head + tail) >= -1e-12)


def test_s_alpha_sup_limit_cases():
    """Test the supremum sits at the limit 2/alpha for alpha <= 1"""
    result = s_alpha_sup(0.5, 1000)
    assert result.sup == 4.0
    assert result.argmax == LIMIT
    assert result.at_limit
    result = s_alpha_sup(1.0, 1000)
    assert result.sup == 2.0
    assert result.argmax == LIMIT


def test_s_alpha_sup_first_row():
    """Test the supremum is S_3(1) = zeta(4) for alpha = 3"""
    result = s_alpha_sup(3.0, 1000)
    assert result.argmax == 1
    assert result.sup == pytest.approx(ZETA_4, abs=1e-9)


def test_s_alpha_large_alpha():
    """Test S_alpha stays finite where m**alpha overflows"""
    value = s_alpha(150.0, 1000)
    assert math.isfinite(value)
    assert value == pytest.approx(2.0 / 150.0, abs=1e-4)


def test_majorant_components_large_alpha():
    """Test both pieces stay finite and positive for alpha = 300"""
    head, tail = majorant_components(300.0, 500)
    assert np.all(np.isfinite(head)) and np.all(np.isfinite(tail))
    assert np.all(head > 0) and np.all(tail > 0)
    assert tail[0] == pytest.approx(2.0 ** -301, rel=1e-12)


def test_s_alpha_sup_large_alpha():
    """Test the supremum for alpha = 70 is S_70(1) = zeta(71)"""
    result = s_alpha_sup(70.0, 2000)
    assert result.argmax == 1
    assert result.sup == pytest.approx(1.0, abs=1e-15)


def test_majorant_components_compensated():
    """Test the recurrences agree with correctly rounded sums"""
    head, tail = majorant_components(1.5, 2000)
    for m in (10, 500, 2000):
        direct_head = direct_sum(0.5, 1, m) / m ** 1.5
        assert head[m - 1] == pytest.approx(direct_head, rel=1e-12)
        direct_tail = s_alpha(1.5, m, tol=1e-12) - direct_head
        assert tail[m - 1] == pytest.approx(direct_tail, abs=2e-10)


@pytest.mark.slow
@pytest.mark.parametrize("alpha", [0.5, 1.0, 1.2, 1.5, 2.0, 2.5, 3.0, 4.0])
def test_s_alpha_sup_formula(alpha):
    """Test sup_m S_alpha(m) = max(2/alpha, zeta(1 + alpha))"""
    result = s_alpha_sup(alpha, 100_000)
    assert abs(result.sup - max(2.0 / alpha, zeta(1.0 + alpha))) <= 1e-6


def test_lemma4_examples():
    """Test the closed-form estimates at documented points"""
    zeta_lower = lemma4_estimate(LemmaEstimate.ZETA_LOWER, 1.0)
    assert zeta_lower == pytest.approx(1.633333, abs=1e-6)
    assert zeta_lower <= ZETA_2

    tail_upper = lemma4_estimate(LemmaEstimate.TAIL_UPPER, 1.0, 10)
    assert tail_upper == pytest.approx(0.951667, abs=1e-6)
    direct = 10.0 * (ZETA_2 - direct_sum(-2.0, 1, 10))
    assert direct <= tail_upper

    partial = lemma4_estimate(LemmaEstimate.PARTIAL_UPPER_23, 2.0, 5)
    assert partial == pytest.approx(0.603333, abs=1e-6)
    assert 15.0 / 25.0 <= partial


def test_lemma4_partial_12_first_row():
    """Test both partial_upper_12 forms are exactly attained at m = 1"""
    for alpha in (1.0, 1.3, 2.0):
        assert lemma4_estimate(LemmaEstimate.PARTIAL_UPPER_12, alpha, 1) == pytest.approx(1.0)
        full = lemma4_estimate(LemmaEstimate.PARTIAL_UPPER_12_FULL, alpha, 1)
        assert full == pytest.approx(1.0)


def test_partial_upper_12_below_direct_sum():
    """Test the published partial_upper_12 falls below the sum it should bound"""
    direct = 2.0 ** -1.5 * (1.0 + math.sqrt(2.0))
    published = lemma4_estimate(LemmaEstimate.PARTIAL_UPPER_12, 1.5, 2)
    full = lemma4_estimate(LemmaEstimate.PARTIAL_UPPER_12_FULL, 1.5, 2)
    assert direct == pytest.approx(0.853553, abs=1e-6)
    assert published == pytest.approx(0.853426, abs=1e-6)
    assert full == pytest.approx(0.853578, abs=1e-6)
    assert published < direct <= full


@pytest.mark.parametrize("alpha", [1.1, 1.5, 1.9])
@pytest.mark.parametrize("m", [2, 3, 10, 100])
def test_partial_upper_12_full_bounds_direct_sum(alpha, m):
    """Test the full form bounds the direct sum and is the order-2 Euler-Maclaurin sum"""
    direct = direct_sum(alpha - 1.0, 1, m) / m ** alpha
    full = lemma4_estimate(LemmaEstimate.PARTIAL_UPPER_12_FULL, alpha, m)
    assert direct <= full
    assert lemma4_estimate(LemmaEstimate.PARTIAL_UPPER_12, alpha, m) < direct
    result = em_partial_sum(PowerSumSpec(exponent=alpha - 1.0, start=1, order=2), m)
    assert result.is_upper_bound
    assert result.value * m ** (-alpha) == pytest.approx(full, rel=1e-13)


def test_lemma4_range_mismatch():
    """Test estimates outside their alpha range are rejected"""
    with pytest.raises(PreconditionError):
        lemma4_estimate(LemmaEstimate.PARTIAL_UPPER_12, 2.5, 3)
    with pytest.raises(PreconditionError):
        lemma4_estimate(LemmaEstimate.PARTIAL_UPPER_23, 1.5, 3)


def test_h_functions():
    """Test h1 at alpha = 1 and the signs of h1, h2 across [1, 2]"""
    assert h1(1.0) == pytest.approx(0.208333, abs=1e-6)
    assert h1(1.0) > 0 > h1(2.0)
    assert h2(1.0) < 0 < h2(2.0)
    with pytest.raises(DomainError):
        h1(0.5)
    with pytest.raises(DomainError):
        h2(2.1)


@pytest.mark.parametrize("alpha", [0.5, 1.0, 1.48])
def test_theorem_bounds_exact(alpha):
    """Test lower = upper = 2/alpha on the exact range"""
    report = theorem_bounds(alpha)
    assert report.exact
    assert abs(report.lower - 2.0 / alpha) <= 1e-9
    assert abs(report.upper - 2.0 / alpha) <= 1e-9
    assert report.lower_method is LowerMethod.CONTINUOUS_LIMIT


def test_theorem_bounds_three_halves():
    """Test the bound pair [4/3, zeta(5/2)] at alpha = 3/2"""
    report = theorem_bounds(1.5)
    assert not report.exact
    assert abs(report.lower - 4.0 / 3.0) <= 1e-9
    assert 1.34 < report.upper < 1.35
    assert abs(report.upper - zeta(2.5)) <= 1e-9


def test_theorem_bounds_improved_lower():
    """Test the improved bound wins at alpha = 2"""
    report = theorem_bounds(2.0)
    assert report.lower_method is LowerMethod.IMPROVED
    assert report.lower == pytest.approx(2.0 - ZETA_4 / zeta(3.0), abs=1e-10)
    assert report.upper == pytest.approx(zeta(3.0), abs=1e-12)


def test_theorem_bounds_ordered():
    """Test lower <= upper on a wide grid"""
    for alpha in np.linspace(0.1, 8.0, 80):
        report = theorem_bounds(float(alpha))
        assert report.lower <= report.upper + 1e-12
        assert report.exact == (alpha <= alpha_zero().value)


def test_alpha_zero_defining_equation():
    """Test 2/alpha_0 = zeta(1 + alpha_0)"""
    a0 = alpha_zero().value
    assert abs(2.0 / a0 - zeta(1.0 + a0)) <= 1e-9


def test_bound_report_invariants():
    """Test BoundReport rejects inverted and inexact pairs"""
    param = AlphaParam(alpha=2.0)
    with pytest.raises(InvariantViolationError):
        BoundReport(alpha=param, lower=1.5, upper=1.2, exact=False,
                    lower_method=LowerMethod.IMPROVED)
    with pytest.raises(InvariantViolationError):
        BoundReport(alpha=param, lower=1.0, upper=1.2, exact=True,
                    lower_method=LowerMethod.IMPROVED)


def test_bound_report_tightened():
    """Test tightening only moves the lower bound up"""
    report = theorem_bounds(2.0)
    assert report.tightened(report.lower - 0.1, LowerMethod.RAYLEIGH) is report
    raised = report.tightened(report.lower + 0.01, LowerMethod.RAYLEIGH)
    assert raised.lower_method is LowerMethod.RAYLEIGH
    assert raised.to_dict()["lower_method"] == "rayleigh"


def test_improved_lower_bound_divergent():
    """Test the improved bound needs alpha > 1"""
    with pytest.raises(DivergenceError):
        improved_lower_bound(1.0)


def test_composition_bounds_re_w_one():
    """Test composition bounds at Re w = 1"""
    interval = composition_bounds(1.0)
    assert abs(interval.upper - 2.0) <= 1e-9
    assert abs(interval.lower - math.sqrt(ZETA_2)) <= 1e-9


def test_composition_bounds_re_w_three_halves():
    """Test the sharp upper bound sqrt(2) at Re w = 3/2"""
    assert composition_bounds(1.5).upper == pytest.approx(math.sqrt(2.0), abs=1e-9)


def test_composition_bounds_domain():
    """Test Re w <= 1/2 is rejected"""
    with pytest.raises(DomainError):
        composition_bounds(0.5)


def test_composition_bounds_ordered():
    """Test lower <= upper for Re w in (1/2, 2]"""
    for k in range(1, 16):
        interval = composition_bounds(0.5 + k / 10.0)
        assert interval.lower <= interval.upper + 1e-12


def test_disc_bounds():
    """Test the disc bounds at r = 0 and r = 1/2"""
    assert disc_bounds(0.0) == (1.0, 1.0)
    interval = disc_bounds(0.5)
    assert interval.upper == pytest.approx(math.sqrt(3.0))
    assert interval.lower == pytest.approx(math.sqrt(4.0 / 3.0))
    with pytest.raises(DomainError):
        disc_bounds(1.0)
    with pytest.raises(DomainError):
        disc_bounds(-0.1)


def test_transfer_alpha_r():
    """Test the transferred parameter"""
    assert transfer_alpha_r(1.7, 0.0).alpha == 1.7
    assert transfer_alpha_r(1.0, 1.0 / 3.0).alpha == pytest.approx(0.5)
    values = [transfer_alpha_r(2.0, r).alpha for r in (0.9, 0.99, 0.999)]
    assert values[0] > values[1] > values[2] > 0


@pytest.mark.parametrize("z", [0.0, 0.5, -0.3 + 0.4j, 0.2j])
def test_conformal_identity(z):
    """Test T_alpha(phi_r(z)) = T_{alpha_r}(-z)"""
    alpha, r = 1.2, 0.4
    alpha_r = transfer_alpha_r(alpha, r)
    assert conformal_map(alpha, mobius(r, z)) == pytest.approx(conformal_map(alpha_r, -z))


def test_conformal_map_pole():
    """Test the conformal map rejects z = -1"""
    with pytest.raises(DomainError):
        conformal_map(1.0, -1)


def test_restated_factor_check():
    """Test the restated product bound on the exact range and for large alpha"""
    for r in (0.0, 0.3, 0.9):
        check = restated_factor_check(1.0, r)
        assert check.holds
        assert not check.non_sharp_certified
    assert restated_factor_check(6.0, 0.9).zeta_ratio_condition


def test_embedding_constant_bounds():
    """Test the embedding constant is sqrt(2/alpha) on the exact range"""
    interval = embedding_constant_bounds(0.5)
    assert interval.lower == pytest.approx(2.0, abs=1e-9)
    assert interval.upper == pytest.approx(2.0, abs=1e-9)


@pytest.mark.parametrize("alpha", [20.0, 30.0, 40.0])
def test_sandwich_gaps_no_cancellation(alpha):
    """Test the scaled gaps keep full accuracy where lower - 1 is below 1e-12"""
    lower_gap, upper_gap = sandwich_gaps(alpha)
    with mpmath.workdps(60):
        a = mpmath.mpf(alpha)
        zeta_odd, zeta_even = mpmath.zeta(2 * a - 1), mpmath.zeta(2 * a)
        improved = (zeta_odd - zeta_even) / zeta_odd * 4 ** a
        upper = (mpmath.zeta(a + 1) - 1) * 2 ** a
    assert lower_gap == pytest.approx(float(improved), rel=1e-10)
    assert upper_gap == pytest.approx(float(upper), rel=1e-10)
    assert lower_gap == pytest.approx(1.0, abs=1e-5)
    assert upper_gap == pytest.approx(0.5, abs=1e-3)


def test_sandwich_gaps_match_bounds_at_two():
    """Test the scaled gaps at alpha = 2 agree with theorem_bounds"""
    report = theorem_bounds(2.0)
    lower_gap, upper_gap = sandwich_gaps(2.0)
    assert report.lower_method is LowerMethod.IMPROVED
    assert lower_gap == pytest.approx((report.lower - 1.0) * 16.0, rel=1e-9)
    assert upper_gap == pytest.approx((report.upper - 1.0) * 4.0, rel=1e-9)


def test_sandwich_gaps_huge_alpha():
    """Test the gaps stay finite where 4**alpha overflows"""
    lower_gap, upper_gap = sandwich_gaps(600.0)
    assert lower_gap == pytest.approx(1.0, abs=1e-12)
    assert upper_gap == pytest.approx(0.5, abs=1e-12)
    with pytest.raises(DomainError):
        sandwich_gaps(1.5)
