import math
from fractions import Fraction
from itertools import permutations
from math import comb

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kepler.jack_poly import (
    DiagonalPoint,
    ExactPhiTable,
    FockTable,
    PhiTable,
    fock_component,
    pieri_coefficients,
    pieri_coefficients_exact,
    pieri_identity_residual,
    spherical_phi,
)
from kepler.jordan_core import DomainError, JordanType, dim_full, normalize_partition, parse_type_name, partitions_of, partitions_upto, pochhammer_exact

points = st.lists(st.floats(0.05, 2.0), min_size=1, max_size=3)
small_partitions = st.lists(st.integers(0, 5), min_size=1, max_size=3).map(lambda m: tuple(sorted(m, reverse=True)))


def _schur_normalized(mu, t):
    n = len(t)
    lam = list(mu) + [0] * (n - len(mu))
    num = np.linalg.det(np.array([[x ** (lam[j] + n - 1 - j) for j in range(n)] for x in t]))
    den = np.linalg.det(np.array([[x ** (n - 1 - j) for j in range(n)] for x in t]))
    at_one = math.prod((lam[i] - lam[j] + j - i) / (j - i) for i in range(n) for j in range(i + 1, n))
    return num / den / at_one


def test_domain_flags():
    DiagonalPoint((0.2, 0.9), "bounded")
    with pytest.raises(DomainError):
        DiagonalPoint((0.2, 1.0), "bounded")
    with pytest.raises(DomainError):
        DiagonalPoint((0.0, 1.0), "cone")
    with pytest.raises(DomainError):
        DiagonalPoint((1.0,), "disc")


def test_phi_trivial_cases():
    assert spherical_phi((), (0.3, 1.7), 1) == 1
    assert spherical_phi((5,), (1.3,), 2) == pytest.approx(1.3**5)


@pytest.mark.parametrize("a", [1, 2, 4, 0.6])
def test_phi_degree_one(a):
    assert spherical_phi((1,), (0.4, 1.8), a) == pytest.approx(1.1)


@pytest.mark.parametrize("a", [1, 2, 4, 8, 0.6])
@pytest.mark.parametrize("t", [(0.3, 1.7), (0.5, 0.9, 1.4)])
def test_phi_second_degree_row(a, t):
    # J_(2) is proportional to m_(2) + 2/(1 + alpha) m_(1,1), alpha = 2/a
    alpha = 2 / a
    c = 2 / (1 + alpha)
    n = len(t)
    m2 = sum(x * x for x in t)
    m11 = sum(t[i] * t[j] for i in range(n) for j in range(i + 1, n))
    want = (m2 + c * m11) / (n + c * comb(n, 2))
    assert spherical_phi((2,), t, a) == pytest.approx(want, rel=1e-13)


@pytest.mark.parametrize("mu", [(3,), (2, 1), (4, 2), (3, 1, 1), (2, 2, 2), (5, 3, 1)])
def test_phi_complex_case_is_schur(mu):
    t = (0.35, 1.2, 1.9)
    assert spherical_phi(mu, t, 2) == pytest.approx(_schur_normalized(mu, t), rel=1e-11)


@pytest.mark.parametrize("a", [1, 2, 4])
def test_phi_normalized_at_identity(a):
    for mu in partitions_upto(6, 3):
        assert spherical_phi(mu, (1.0, 1.0, 1.0), a) == pytest.approx(1.0, rel=1e-13)


def test_phi_general_branching_matches_row_formula():
    t = (0.7, 0.25)
    for a in (1, 4, 0.6):
        fast, slow = PhiTable(t, a), PhiTable(t, a, general=True)
        for mu in partitions_upto(7, 2):
            assert fast.value(mu) == pytest.approx(slow.value(mu), rel=1e-12)


def test_exact_phi_agrees_with_float():
    t = (Fraction(1, 3), Fraction(7, 5), Fraction(2, 7))
    exact = ExactPhiTable(t, 1)
    table = PhiTable([float(x) for x in t], 1)
    for mu in partitions_upto(5, 3):
        assert float(exact.value(mu)) == pytest.approx(table.value(mu), rel=1e-12)


@settings(max_examples=80, deadline=None)
@given(t=points, mu=small_partitions, a=st.sampled_from([1, 2, 4, 0.6]), c=st.floats(0.2, 3.0))
def test_phi_homogeneous(t, mu, a, c):
    if len(mu) > len(t):
        return
    lhs = spherical_phi(mu, [c * x for x in t], a)
    rhs = c ** sum(mu) * spherical_phi(mu, t, a)
    assert lhs == pytest.approx(rhs, rel=1e-12)


@settings(max_examples=60, deadline=None)
@given(t=st.lists(st.floats(0.05, 2.0), min_size=2, max_size=3), mu=small_partitions, a=st.sampled_from([1, 2, 4]))
def test_phi_symmetric(t, mu, a):
    if len(mu) > len(t):
        return
    ref = spherical_phi(mu, t, a)
    for perm in permutations(t):
        assert spherical_phi(mu, perm, a) == pytest.approx(ref, rel=1e-13)


def test_fock_rank_one():
    for jt in (JordanType(1, 1, 0), JordanType(1, 3, 2)):
        for m in range(8):
            assert fock_component((m,), (1.7,), jt) == pytest.approx(1.7**m / math.factorial(m), rel=1e-13)


def test_fock_independent_of_b():
    t = (0.4, 1.1)
    for mu in partitions_upto(5, 2):
        assert fock_component(mu, t, JordanType(2, 2, 0)) == pytest.approx(fock_component(mu, t, JordanType(2, 2, 3)), rel=1e-13)


def test_fock_pads_short_points():
    jt = parse_type_name("sym:3")
    assert fock_component((2, 1), (0.5, 0.3), jt) == pytest.approx(fock_component((2, 1), (0.5, 0.3, 0.0), jt))
    assert fock_component((1, 1, 1), (0.5, 0.3), jt) == 0.0


@settings(max_examples=40, deadline=None)
@given(t=points, a=st.sampled_from([1, 2, 4]), b=st.sampled_from([0, 1]), k=st.integers(0, 9))
def test_fock_degree_identity(t, a, b, k):
    jt = JordanType(len(t), a, b)
    table = FockTable(t, jt)
    s = sum(t)
    shell = math.fsum(table.value(mu) for mu in partitions_of(k, jt.r))
    assert shell == pytest.approx(s**k / math.factorial(k), rel=1e-11)


def test_fock_exponential_small_point():
    t = (0.9, 0.6, 0.3)
    for a in (1, 2, 4):
        table = FockTable(t, JordanType(3, a, 0))
        total = math.fsum(table.value(mu) for mu in partitions_upto(20, 3))
        assert total == pytest.approx(math.exp(sum(t)), abs=1e-10)


def test_pieri_rank_one():
    # (1 - x) x^m/m! = x^m/m! - (m+1) x^{m+1}/(m+1)!
    jt = JordanType(1, 1, 0)
    for m in range(6):
        c = pieri_coefficients_exact((m,), jt)
        assert c == {normalize_partition((m,)): 1, (m + 1,): -(m + 1)}


@pytest.mark.parametrize("name", ["sym:2", "sym:3", "full:2,3", "spin:5", "exc:27"])
def test_pieri_empty_partition_is_elementary_expansion(name):
    # N(e - x) = sum_i (-1)^i e_i(x) and e_i = C(r, i) Phi_(1^i)
    jt = parse_type_name(name)
    c = {nu: v for nu, v in pieri_coefficients_exact((), jt).items() if v}
    want = {}
    for i in range(jt.r + 1):
        nu = (1,) * i
        want[nu] = (-1) ** i * comb(jt.r, i) * pochhammer_exact(jt.d_over_r, nu, jt.a) / Fraction(dim_full(nu, jt))
    assert c == want


def test_pieri_float_route_for_irrational_a():
    jt = JordanType(2, 1.3, 0)
    gamma = 3.3
    coeffs = {mu: pieri_coefficients(mu, jt) for mu in partitions_upto(4, 2)}
    for nu in partitions_upto(4, 2):
        ref = abs(pochhammer_exact(Fraction(gamma - 1), nu, Fraction(13, 10)))
        assert abs(pieri_identity_residual(nu, jt, gamma, coeffs)) <= 1e-6 * max(1.0, float(ref))


@settings(max_examples=15, deadline=None)
@given(num=st.integers(2, 40), den=st.integers(1, 9), name=st.sampled_from(["sym:2", "full:2,2", "spin:6", "sym:3"]))
def test_pieri_identity_holds_for_any_gamma(num, den, name):
    jt = parse_type_name(name)
    gamma = Fraction(num, den)
    coeffs = {mu: pieri_coefficients_exact(mu, jt) for mu in partitions_upto(3, jt.r)}
    for nu in partitions_upto(3, jt.r):
        assert pieri_identity_residual(nu, jt, gamma, coeffs) == 0.0


def test_pieri_size_guard():
    with pytest.raises(DomainError):
        pieri_coefficients((13,), JordanType(1, 1, 0))
