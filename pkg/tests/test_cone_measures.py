import math
from fractions import Fraction

import pytest
from scipy.special import betaln

from kepler.cone_measures import (
    RadialDensity,
    conformal_volume,
    eigenvalue_quadrature,
    holomorphic_form_exponent,
    invariant_measure_power,
    log_radial_density,
    peirce_volume,
    radial_density,
    tripotent_volume,
    volume_identity_cases,
)
from kepler.jordan_core import DomainError, JordanType, classified_table, derive_invariants, kernel_prefactor, parse_type_name
from kepler.kepler_kernels import Bounded, Flat, KernelSpec, moments_bounded, moments_flat, radial_density_of


@pytest.mark.parametrize("n", [2, 3, 5, 8])
@pytest.mark.parametrize("t", [0.3, 1.7])
def test_spin_riemann_density(n, t):
    # spin factor with d_1 = n: the cone over a sphere, 2 pi^n / (n-1)! t^{n-1}
    jt = JordanType(2, n - 1, 0)
    want = 2 * math.pi**n / math.factorial(n - 1) * t ** (n - 1)
    assert radial_density(RadialDensity("riemann", jt, 1), (t,)) == pytest.approx(want, rel=1e-13)


@pytest.mark.parametrize("name", ["sym:3", "full:2,4", "exc:16"])
def test_bounded_rank_one_density(name):
    jt = parse_type_name(name)
    nu, t = float(jt.p) + 2.5, 0.35
    p = float(jt.p)
    want = kernel_prefactor(jt, 1).value() * t ** (p - 2) * (1 - t) ** (nu - p)
    assert radial_density(RadialDensity("bounded", jt, 1, nu=nu), (t,)) == pytest.approx(want, rel=1e-13)


@pytest.mark.parametrize("name, t", [("sym:3", (0.8, 0.3)), ("spin:5", (1.4,)), ("exc:27", (0.6, 0.2)), ("sym:4", (2.0, 1.1, 0.5))])
def test_riemann_over_invariant_is_norm_power(name, t):
    jt = parse_type_name(name)
    ell = len(t)
    kr = derive_invariants(jt, ell)
    k = invariant_measure_power(jt, ell)
    # second route: d_l / l - a r / 2
    assert Fraction(kr.d_ell) / ell - Fraction(jt.a) * jt.r / 2 == k
    diff = log_radial_density(RadialDensity("riemann", jt, ell), t) - log_radial_density(RadialDensity("invariant", jt, ell), t)
    assert diff == pytest.approx(float(k) * sum(map(math.log, t)), abs=1e-12)


def test_invariant_measure_examples():
    jt = parse_type_name("sym:3")
    assert invariant_measure_power(jt, 1) == Fraction(3, 2)
    assert holomorphic_form_exponent(jt, 1) == Fraction(1, 2)
    assert invariant_measure_power(parse_type_name("spin:5"), 1) == 1
    for _, jt in classified_table():
        if jt.b == 0:
            # on the open cone the exponent is 1 - a/2
            assert invariant_measure_power(jt, jt.r) == 1 - Fraction(jt.a) / 2
    with pytest.raises(DomainError):
        invariant_measure_power(parse_type_name("full:2,3"), 1)
    with pytest.raises(DomainError):
        RadialDensity("invariant", parse_type_name("full:2,3"), 1)


@pytest.mark.parametrize("ab", [(1, 0), (2, 3), (4, 1), (6, 4)])
def test_rank_one_tripotents_form_a_sphere(ab):
    jt = JordanType(1, *ab)
    d = float(jt.d)
    assert tripotent_volume(jt, 1).value() == pytest.approx(2 * math.pi**d / math.gamma(d), rel=1e-13)


def test_volume_examples():
    assert conformal_volume(JordanType(1, 1, 0)).value() == pytest.approx(1.0)
    assert peirce_volume(JordanType(2, 2, 0), 2).value() == pytest.approx(1.0)
    for name, jt in classified_table():
        if jt.b == 0:
            assert peirce_volume(jt, jt.r).log_abs == pytest.approx(0.0, abs=1e-12), name


def test_volume_identity_chains():
    cases = volume_identity_cases()
    assert len(cases) > 300
    worst = max(cases, key=lambda c: c.max_deviation())
    assert worst.max_deviation() <= 1e-10, worst.label


@pytest.mark.parametrize("name, nu", [("sym:3", 7.0), ("spin:7", 9.5), ("full:2,4", 8.0)])
def test_rank_one_quadrature_recovers_bounded_norm(name, nu):
    jt = parse_type_name(name)
    spec = KernelSpec(jt, 1, Bounded(), nu)
    q = eigenvalue_quadrature(lambda t: 1.0, radial_density_of(spec))
    p = float(jt.p)
    want = kernel_prefactor(jt, 1).log_abs + float(betaln(p - 1, nu - p + 1))
    assert math.log(q.value) == pytest.approx(want, abs=1e-10)
    assert q.value == pytest.approx(moments_bounded(spec, ()).value(), rel=1e-10)


@pytest.mark.parametrize("lam", [1.0, 0.6, 2.2])
def test_rank_one_quadrature_recovers_flat_norm(lam):
    spec = KernelSpec(parse_type_name("sym:3"), 1, Flat(lam), 2.0)
    q = eigenvalue_quadrature(lambda t: 1.0, radial_density_of(spec))
    assert q.value == pytest.approx(moments_flat(spec, ()).value(), rel=1e-9)


def test_quadrature_limits():
    jt = parse_type_name("sym:3")
    with pytest.raises(DomainError):
        eigenvalue_quadrature(lambda t: 1.0, RadialDensity("flat", jt, 3, nu=1.0))
    with pytest.raises(DomainError):
        eigenvalue_quadrature(lambda t: 1.0, RadialDensity("riemann", jt, 1))


def test_density_validation():
    jt = parse_type_name("sym:3")
    with pytest.raises(DomainError):
        RadialDensity("gaussian", jt, 1)
    with pytest.raises(DomainError):
        RadialDensity("flat", jt, 1)
    with pytest.raises(DomainError):
        RadialDensity("flat", jt, 1, lambda_exp=0.0, nu=1.0)
    with pytest.raises(DomainError):
        radial_density(RadialDensity("bounded", jt, 1, nu=5.0), (1.2,))
    with pytest.raises(DomainError):
        radial_density(RadialDensity("riemann", jt, 2), (0.5,))
