import math
from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kepler.asymptotics import (
    ExpPolyFunction,
    asympt_1f1,
    asympt_1f1_series,
    asympt_2f1,
    kempf_expansion,
    kempf_ratio,
    mittag_leffler_asympt,
    rank1_kempf_coeffs,
    tyz_bounded_leading,
    tyz_flat_leading,
)
from kepler.hyper_series import SeriesControl
from kepler.jordan_core import DomainError, JordanType, classified_table, parse_type_name
from kepler.kepler_kernels import Bounded, Flat, KernelSpec, bounded_threshold

DISC = JordanType(1, 1, 0)


@pytest.mark.parametrize("t", [20.0, 40.0, 80.0])
@pytest.mark.parametrize("lam, beta", [(1.5, 3.7), (0.4, 2.9)])
def test_rank_one_1f1_against_mpmath(t, lam, beta):
    v = asympt_1f1(lam, beta, (t,), DISC, 8)
    exact = float(mpmath.gamma(lam) / mpmath.gamma(beta) * mpmath.hyp1f1(lam, beta, t))
    assert abs(v.value / exact - 1) <= 3 * v.omitted_abs / abs(v.value) + 1e-13


@pytest.mark.parametrize("nu", [50.0, 100.0, 200.0])
def test_rank_one_2f1_against_mpmath(nu):
    lam, beta, y = 1.5, 2.7, 0.5
    v = asympt_2f1(lam, beta, nu, (y,), DISC, 6)
    exact = mpmath.log(mpmath.gamma(lam) * mpmath.gamma(nu) / mpmath.gamma(beta) * mpmath.hyp2f1(lam, nu, beta, y))
    got = v.log_prefactor + math.log(v.series)
    assert abs(got - float(exact)) <= 3 * abs(v.omitted / v.series) + 1e-12


def test_rank_one_coefficients_are_classical():
    # e^t t^{lam-beta} sum_m (1-lam)_m (beta-lam)_m / m! t^{-m}
    lam, beta, t = 1.5, 3.7, 12.0
    series = asympt_1f1_series(lam, beta, (t,), DISC, 5)
    shells = series.shells()
    for m, s in enumerate(shells):
        want = float(mpmath.rf(1 - lam, m) * mpmath.rf(beta - lam, m) / mpmath.factorial(m)) / t**m
        assert s == pytest.approx(want, rel=1e-13)
    assert series.log_prefactor == pytest.approx(t + (lam - beta) * math.log(t))


@pytest.mark.parametrize("name", ["sym:2", "full:2,2", "sym:3", "spin:6"])
def test_series_collapses_at_tube_dimension(name):
    jt = parse_type_name(name)
    lam = float(jt.dprime_over_r)
    t = (30.0, 20.0, 25.0)[: jt.r]
    v = asympt_1f1(lam, lam + 2.3, t, jt, 6)
    assert v.series == 1.0 and v.omitted == 0.0
    y = (0.6, 0.5, 0.4)[: jt.r]
    w = asympt_2f1(lam, lam + 2.3, 40.0, y, jt, 6)
    assert w.series == 1.0 and w.omitted == 0.0


def test_order_zero_is_prefactor():
    jt = parse_type_name("sym:3")
    s = asympt_1f1_series(2.2, 3.9, (9.0, 7.0, 8.0), jt, 0)
    assert s.shells()[0] == pytest.approx(1.0)


def test_asymptotic_domain_errors():
    jt = parse_type_name("sym:2")
    with pytest.raises(DomainError):
        asympt_1f1(1.5, 3.0, (1.0,), jt, 3)
    with pytest.raises(DomainError):
        asympt_1f1(1.5, 3.0, (1.0, -2.0), jt, 3)
    with pytest.raises(DomainError):
        asympt_1f1(1.5, 3.0, (1.0, 2.0), jt, -1)
    with pytest.raises(DomainError):
        asympt_2f1(1.5, 3.0, 20.0, (0.5, 1.0), jt, 3)
    with pytest.raises(DomainError):
        asympt_2f1(0.2, 3.0, 20.0, (0.5, 0.4), jt, 3)


def test_mittag_leffler_leading_terms():
    for s in (2.0, 10.0, 50.0):
        assert mittag_leffler_asympt(1, 1, s) == pytest.approx(math.exp(s), rel=1e-14)
    # E_{2,1}(s) = cosh(sqrt s)
    s = 400.0
    assert mittag_leffler_asympt(2, 1, s) == pytest.approx(math.cosh(math.sqrt(s)), rel=1e-8)
    with pytest.raises(DomainError):
        mittag_leffler_asympt(1, 1, 0.0)


@settings(max_examples=40, deadline=None)
@given(
    lam=st.sampled_from([Fraction(1), Fraction(1, 2), Fraction(3, 2), Fraction(2)]),
    q=st.integers(-3, 3),
    c=st.integers(-5, 5),
    s=st.floats(0.5, 2.0),
)
def test_exp_poly_derivative_matches_difference_quotient(lam, q, c, s):
    f = ExpPolyFunction.monomial(lam, Fraction(q), Fraction(c)) + ExpPolyFunction.monomial(lam, Fraction(q, 2) + 1)
    h = 1e-5
    numeric = (f(s + h) - f(s - h)) / (2 * h)
    assert f.derivative()(s) == pytest.approx(numeric, rel=1e-6, abs=1e-6)


def test_exp_poly_algebra():
    f = ExpPolyFunction.monomial(Fraction(1), Fraction(2), Fraction(3))
    assert f.times_power(Fraction(1, 2)).terms == {Fraction(5, 2): Fraction(3)}
    assert (f + f.scale(Fraction(-1))).terms == {}
    # d/ds e^s = e^s
    assert ExpPolyFunction.monomial(Fraction(1), Fraction(0)).derivative(3).terms == {Fraction(0): Fraction(1)}
    with pytest.raises(DomainError):
        f + ExpPolyFunction.monomial(Fraction(2), Fraction(0))


def test_kempf_leading_coefficient_is_one():
    for name, jt in classified_table():
        if jt.p <= 12:
            assert rank1_kempf_coeffs(jt, 1)[0] == 1, name


def test_kempf_frozen_spin_six():
    jt = parse_type_name("spin:6")
    assert rank1_kempf_coeffs(jt, 1) == [1, -2, 6, -12, 12]
    assert rank1_kempf_coeffs(jt, 2) == [1, -6, Fraction(99, 4), Fraction(-255, 4), Fraction(315, 4)]
    assert rank1_kempf_coeffs(jt, "2") == rank1_kempf_coeffs(jt, Fraction(2))


def test_kempf_genus_two_has_no_corrections():
    assert rank1_kempf_coeffs(DISC, Fraction(3, 2)) == [1]


@pytest.mark.parametrize("lam", [1, 2, Fraction(3, 2)])
def test_kempf_expansion_matches_kernel(lam):
    jt = parse_type_name("spin:6")
    coeffs = rank1_kempf_coeffs(jt, lam)
    nu, t = 60.0, 1.0
    spec = KernelSpec(jt, 1, Flat(float(lam)), nu)
    ratio = kempf_ratio(spec, t, SeriesControl(max_degree=4000))
    assert ratio == pytest.approx(kempf_expansion(coeffs, nu, t, float(lam)), rel=1e-10)


def test_kempf_rejects_inexact_input():
    jt = parse_type_name("spin:6")
    with pytest.raises(DomainError):
        rank1_kempf_coeffs(jt, 1.5)
    with pytest.raises(DomainError):
        rank1_kempf_coeffs(jt, 0)
    with pytest.raises(DomainError):
        kempf_ratio(KernelSpec(jt, 2, Flat(1.0), 3.0), 1.0, SeriesControl(max_degree=50))


@pytest.mark.parametrize("t", [0.7, 1.4])
def test_flat_tyz_two_by_two_symmetric(t):
    # genus 3: the expansion stops after 1 - 1/(2 nu t)
    spec = KernelSpec(parse_type_name("sym:2"), 1, Flat(1.0), 1.0)
    for row in tyz_flat_leading(spec, (t,), [40.0, 80.0], SeriesControl(max_degree=800)):
        assert row.ratio == pytest.approx(1 - 1 / (2 * row.nu * t), rel=1e-11)


def test_flat_tyz_full_rank_is_exact():
    spec = KernelSpec(parse_type_name("sym:2"), 2, Flat(1.0), 1.0)
    for row in tyz_flat_leading(spec, (0.7, 0.2), [5.0, 20.0], SeriesControl(max_degree=600)):
        assert row.ratio == pytest.approx(1.0, rel=1e-12)


@pytest.mark.parametrize("name, ell, t", [("spin:5", 1, (0.4,)), ("sym:2", 1, (0.3,)), ("sym:3", 2, (0.3, 0.2))])
def test_bounded_tyz_converges_like_inverse_weight(name, ell, t):
    jt = parse_type_name(name)
    base = bounded_threshold(jt, ell)
    spec = KernelSpec(jt, ell, Bounded(), base + 1.0)
    rows = tyz_bounded_leading(spec, t, [base + 20, base + 40, base + 80], SeriesControl(max_degree=3000))
    errs = [abs(r.ratio - 1) for r in rows]
    assert errs[0] > errs[1] > errs[2]
    assert all(r.scaled_error < 10 for r in rows)


def test_tyz_potential_checks():
    jt = parse_type_name("sym:2")
    with pytest.raises(DomainError):
        tyz_bounded_leading(KernelSpec(jt, 1, Flat(1.0), 1.0), (0.3,), [10.0], SeriesControl())
    with pytest.raises(DomainError):
        tyz_flat_leading(KernelSpec(jt, 1, Flat(2.0), 1.0), (0.3,), [10.0], SeriesControl())
