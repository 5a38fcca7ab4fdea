import math

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kepler.hyper_series import SeriesControl, SeriesResult, hyper_pFq, mittag_leffler, sum_shells
from kepler.jack_poly import FockTable
from kepler.jordan_core import DomainError, JordanType, LogValue, partitions_of, pochhammer_partition

CTL = SeriesControl(max_degree=200)


def test_control_validation():
    with pytest.raises(DomainError):
        SeriesControl(max_degree=-1)
    with pytest.raises(DomainError):
        SeriesControl(abs_tol=0.0)


@pytest.mark.parametrize("t", [(0.7,), (1.3, 0.2), (1.9, 0.4, 1.1)])
@pytest.mark.parametrize("a", [1, 2, 4])
def test_0f0_is_exponential(t, a):
    res = hyper_pFq([], [], t, JordanType(len(t), a, 0), CTL)
    assert res.converged
    assert res.value == pytest.approx(math.exp(sum(t)), rel=1e-13)


@pytest.mark.parametrize("t", [(0.3,), (0.45, 0.1), (0.3, 0.2, 0.25)])
def test_1f0_is_binomial(t):
    jt = JordanType(len(t), 2, 1)
    res = hyper_pFq([1.7], [], t, jt, SeriesControl(max_degree=120))
    assert res.value == pytest.approx(math.prod((1 - x) ** -1.7 for x in t), rel=1e-12)


@pytest.mark.parametrize("lam, beta, z", [(1.5, 3.7, 2.0), (0.3, 2.2, -4.0), (2.5, 1.1, 9.0)])
def test_rank_one_1f1_is_kummer(lam, beta, z):
    res = hyper_pFq([lam], [beta], (z,), JordanType(1, 1, 0), CTL)
    assert res.value == pytest.approx(float(mpmath.hyp1f1(lam, beta, z)), rel=1e-12)


@pytest.mark.parametrize("a1, a2, b, y", [(1.5, 7.0, 2.7, 0.3), (0.5, 2.0, 3.5, -0.8), (3.0, 3.0, 1.2, 0.9)])
def test_rank_one_2f1(a1, a2, b, y):
    res = hyper_pFq([a1, a2], [b], (y,), JordanType(1, 1, 0), SeriesControl(max_degree=2000))
    assert res.converged
    assert res.value == pytest.approx(float(mpmath.hyp2f1(a1, a2, b, y)), rel=1e-11)


@settings(max_examples=40, deadline=None)
@given(
    lam=st.floats(0.2, 4.0),
    beta=st.floats(2.2, 5.0),
    t=st.lists(st.floats(-3.0, 3.0), min_size=1, max_size=2),
    a=st.sampled_from([1, 2]),
)
def test_kummer_relation(lam, beta, t, a):
    jt = JordanType(len(t), a, 0)
    lhs = hyper_pFq([lam], [beta], t, jt, CTL)
    rhs = hyper_pFq([beta - lam], [beta], [-x for x in t], jt, CTL)
    assert lhs.value == pytest.approx(math.exp(sum(t)) * rhs.value, rel=1e-9)


def test_shell_decay_tail():
    jt = JordanType(2, 1, 0)
    t = (1.2, 0.7)
    table = FockTable(t, jt)
    shells = []
    for k in range(41):
        terms = [(pochhammer_partition(1.3, mu, 1) / pochhammer_partition(2.9, mu, 1) * table.log_value(mu)).value() for mu in partitions_of(k, 2)]
        shells.append(abs(math.fsum(terms)))
    tail = shells[-5:]
    assert all(x > y for x, y in zip(tail, tail[1:]))


def test_large_argument_stays_finite_in_log_space():
    # e^900 is beyond the float range; the log form is not
    res = hyper_pFq([], [], (900.0,), JordanType(1, 1, 0), SeriesControl(max_degree=3000))
    assert res.converged
    assert res.log_value().log_abs == pytest.approx(900.0, rel=1e-13)


def test_convergence_flag_respects_tolerance():
    res = hyper_pFq([], [], (30.0,), JordanType(1, 1, 0), SeriesControl(max_degree=10))
    assert not res.converged and res.degrees_used == 11
    assert abs(res.last_shell) > 1e-14 * abs(res.value)


def test_domain_errors():
    jt = JordanType(2, 1, 0)
    with pytest.raises(DomainError):
        hyper_pFq([1.0, 2.0], [3.0], (0.5, 1.0), jt, CTL)
    with pytest.raises(DomainError):
        hyper_pFq([1.0, 2.0], [], (0.1, 0.1), jt, CTL)
    with pytest.raises(DomainError):
        # (1/2)_{(1,1)} with a = 1 has the factor (0)_1
        hyper_pFq([1.0], [0.5], (0.1, 0.1), jt, CTL)
    with pytest.raises(DomainError):
        hyper_pFq([], [], (0.1, 0.1, 0.1), jt, CTL)


def test_formal_2f0_never_converges():
    res = hyper_pFq([1.0, 2.0], [], (0.01,), JordanType(1, 1, 0), SeriesControl(max_degree=5), asymptotic_only=True)
    assert not res.converged and res.asymptotic_only


def test_sum_shells_never_stops_before_allowed():
    res = sum_shells(lambda k: [LogValue.from_float(1.0)] if k == 0 else [], SeriesControl(max_degree=20), allow_stop=lambda k: k >= 8)
    assert res.converged and res.degrees_used == 9 and res.value == 1.0


@pytest.mark.parametrize("s", [0.5, 3.0, 25.0, -4.0])
def test_mittag_leffler_exponential(s):
    res = mittag_leffler(1, 1, s, SeriesControl(max_degree=500))
    assert res.value == pytest.approx(math.exp(s), rel=1e-13)


@pytest.mark.parametrize("s", [0.5, 3.0, 20.0])
def test_mittag_leffler_classical(s):
    assert mittag_leffler(1, 2, s, CTL).value == pytest.approx(math.expm1(s) / s, rel=1e-13)
    assert mittag_leffler(2, 1, s, CTL).value == pytest.approx(math.cosh(math.sqrt(s)), rel=1e-13)


def test_mittag_leffler_rank_one_kernel_series():
    lam, p, nu, t = 1.7, 6, 12.0, 0.8
    res = mittag_leffler(1 / lam, p - 1, nu ** (1 / lam) * t, SeriesControl(max_degree=400))
    s = math.log(nu ** (1 / lam) * t)
    direct = math.fsum(math.exp(m * s - math.lgamma(p - 1 + m / lam)) for m in range(400))
    assert res.value == pytest.approx(direct, rel=1e-12)


def test_mittag_leffler_skips_poles():
    # B = 0: the m = 0 term 1/Gamma(0) vanishes
    res = mittag_leffler(1, 0, 2.0, CTL)
    assert res.value == pytest.approx(2.0 * math.exp(2.0), rel=1e-13)


def test_result_value_properties():
    r = SeriesResult(0.5, 10.0, 1e-3, True, 4)
    assert r.value == pytest.approx(0.5 * math.exp(10.0))
    assert r.last_shell == pytest.approx(1e-3 * math.exp(10.0))
