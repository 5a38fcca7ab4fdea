"""Large-argument and large-weight expansions.

Expansions are formal: evaluators return the truncated sum together with the
first omitted shell as an error proxy and never claim convergence.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from kepler.jack_poly import DiagonalPoint, FockTable, _as_tuple
from kepler.jordan_core import (
    DomainError,
    JordanType,
    LogValue,
    is_rational,
    log_gindikin_gamma,
    partitions_of,
    pochhammer_partition,
)
from kepler.kepler_kernels import Bounded, KernelSpec, kernel_diag
from kepler.hyper_series import SeriesControl

Partition = tuple[int, ...]


@dataclass(frozen=True)
class AsymptoticValue:
    """exp(log_prefactor) * series, with the next shell as error proxy."""

    log_prefactor: float
    series: float
    omitted: float
    order: int

    @property
    def value(self) -> float:
        return math.copysign(math.exp(self.log_prefactor + math.log(abs(self.series))), self.series) if self.series else 0.0

    @property
    def omitted_abs(self) -> float:
        return math.exp(self.log_prefactor) * abs(self.omitted)


@dataclass
class AsymptoticSeries:
    """Formal series sum_mu c_mu E^mu_e(x) behind an exponential/determinant prefactor."""

    prefactor: str
    log_prefactor: float
    coefficients: dict[Partition, LogValue]
    argument: tuple[float, ...]
    jt: JordanType
    order: int

    def shells(self) -> list[float]:
        """Shell sums for degrees 0..order+1."""
        fock = FockTable(self.argument, self.jt)
        out = []
        for k in range(self.order + 2):
            terms = [(c * fock.log_value(mu)).value() for mu, c in self.coefficients.items() if sum(mu) == k]
            out.append(math.fsum(terms))
        return out

    def evaluate(self) -> AsymptoticValue:
        sh = self.shells()
        return AsymptoticValue(self.log_prefactor, math.fsum(sh[:-1]), sh[-1], self.order)


def _poch_product(params: Sequence[float], mu: Partition, a: float) -> LogValue:
    out = LogValue.one()
    for s in params:
        out = out * pochhammer_partition(s, mu, a)
    return out


def _tube_dr(jt: JordanType) -> float:
    # the expansions live on the euclidean Jordan algebra, i.e. the tube type
    return float(jt.dprime_over_r)


def asympt_1f1_series(lam: float, beta: float, t: DiagonalPoint | Sequence[float], jt: JordanType, order: int) -> AsymptoticSeries:
    pt = _as_tuple(t)
    if len(pt) != jt.r or not all(x > 0 for x in pt):
        raise DomainError("asymptotic 1F1 needs a point with r positive entries")
    if order < 0:
        raise DomainError("order must be non-negative")
    dr = _tube_dr(jt)
    a = float(jt.a)
    coeffs = {}
    for k in range(order + 2):
        for mu in partitions_of(k, jt.r):
            coeffs[mu] = _poch_product([dr - lam, beta - lam], mu, a)
    log_pre = math.fsum(pt) + (lam - beta) * math.fsum(math.log(x) for x in pt)
    inv = tuple(1.0 / x for x in pt)
    return AsymptoticSeries("e^(t|e) N(t)^(lambda-beta)", log_pre, coeffs, inv, jt, order)


def asympt_1f1(lam: float, beta: float, t: DiagonalPoint | Sequence[float], jt: JordanType, order: int) -> AsymptoticValue:
    """Large-argument expansion of Gamma_r(lam)/Gamma_r(beta) 1F1(lam; beta; t)."""
    return asympt_1f1_series(lam, beta, t, jt, order).evaluate()


def asympt_2f1_series(
    lam: float, beta: float, nu: float, y: DiagonalPoint | Sequence[float], jt: JordanType, order: int
) -> AsymptoticSeries:
    pt = _as_tuple(y)
    if len(pt) != jt.r or not all(1e-6 <= x < 1 for x in pt):
        raise DomainError("asymptotic 2F1 needs r entries with 1e-6 <= y_i < 1")
    dr = _tube_dr(jt)
    if not (lam > dr - 1 and beta > dr - 1):
        raise DomainError(f"asymptotic 2F1 needs lambda, beta > {dr - 1:g}")
    a = float(jt.a)
    coeffs = {}
    for k in range(order + 2):
        for mu in partitions_of(k, jt.r):
            den = pochhammer_partition(dr + beta - lam - nu, mu, a)
            if den.sign == 0:
                raise DomainError(f"denominator Pochhammer vanishes at mu={mu}")
            coeffs[mu] = _poch_product([dr - lam, beta - lam], mu, a) / den
    shift = lam - beta
    log_pre = log_gindikin_gamma(jt.r, a, shift + nu).log_abs
    log_pre += shift * math.fsum(math.log(x) for x in pt) - (shift + nu) * math.fsum(math.log1p(-x) for x in pt)
    arg = tuple(1.0 - 1.0 / x for x in pt)
    return AsymptoticSeries("Gamma_r(lambda-beta+nu) N(y)^(lambda-beta) / N(e-y)^(lambda-beta+nu)", log_pre, coeffs, arg, jt, order)


def asympt_2f1(
    lam: float, beta: float, nu: float, y: DiagonalPoint | Sequence[float], jt: JordanType, order: int
) -> AsymptoticValue:
    """Large-nu expansion of Gamma_r(lam) Gamma_r(nu)/Gamma_r(beta) 2F1(lam, nu; beta; y)."""
    return asympt_2f1_series(lam, beta, nu, y, jt, order).evaluate()


def mittag_leffler_asympt(A: float, B: float, s: float) -> float:
    """Leading behaviour (1/A) s^((1-B)/A) exp(s^(1/A)) for s -> +infinity."""
    if not s > 0:
        raise DomainError("Mittag-Leffler asymptotics need s > 0")
    return math.exp(math.log(s) * (1 - B) / A + s ** (1.0 / A)) / A


# ---------------------------------------------------------------------------
# exact operator calculus on s^q exp(s^lambda)


@dataclass
class ExpPolyFunction:
    """sum_q c_q s^q exp(s^lambda) with rational exponents and coefficients."""

    lambda_exp: Fraction
    terms: dict[Fraction, Fraction] = field(default_factory=dict)

    @classmethod
    def monomial(cls, lambda_exp: Fraction, q: Fraction, c: Fraction = Fraction(1)) -> "ExpPolyFunction":
        return cls(Fraction(lambda_exp), {Fraction(q): Fraction(c)})

    def _clean(self) -> "ExpPolyFunction":
        self.terms = {q: c for q, c in self.terms.items() if c != 0}
        return self

    def __add__(self, other: "ExpPolyFunction") -> "ExpPolyFunction":
        if other.lambda_exp != self.lambda_exp:
            raise DomainError("cannot add functions with different exponentials")
        out = dict(self.terms)
        for q, c in other.terms.items():
            out[q] = out.get(q, Fraction(0)) + c
        return ExpPolyFunction(self.lambda_exp, out)._clean()

    def scale(self, c: Fraction) -> "ExpPolyFunction":
        return ExpPolyFunction(self.lambda_exp, {q: v * c for q, v in self.terms.items()})._clean()

    def times_power(self, alpha: Fraction) -> "ExpPolyFunction":
        return ExpPolyFunction(self.lambda_exp, {q + alpha: c for q, c in self.terms.items()})

    def derivative(self, times: int = 1) -> "ExpPolyFunction":
        out = self
        lam = self.lambda_exp
        for _ in range(times):
            acc: dict[Fraction, Fraction] = {}
            for q, c in out.terms.items():
                acc[q - 1] = acc.get(q - 1, Fraction(0)) + c * q
                acc[q - 1 + lam] = acc.get(q - 1 + lam, Fraction(0)) + c * lam
            out = ExpPolyFunction(lam, acc)._clean()
        return out

    def __call__(self, s: float) -> float:
        base = float(s) ** float(self.lambda_exp)
        return math.fsum(float(c) * math.exp(float(q) * math.log(s) + base) for q, c in self.terms.items())


def _rank1_operator(f: ExpPolyFunction, jt: JordanType) -> ExpPolyFunction:
    """s^((1-r)a/2) d^b s^((r-1)a/2+b) prod_{j=2}^r (D_j s + s D_j)/2 with D_j = s^(a-aj/2) d^a s^(aj/2-1)."""
    a, b, r = jt.a, jt.b, jt.r
    if not (float(a).is_integer() and float(b).is_integer()):
        raise DomainError("the rank-1 operator needs integer a and b")
    a, b = int(a), int(b)
    half = Fraction(a, 2)

    def d_j(g: ExpPolyFunction, j: int) -> ExpPolyFunction:
        return g.times_power(half * j - 1).derivative(a).times_power(a - half * j)

    for j in range(2, r + 1):
        f = (d_j(f.times_power(1), j) + d_j(f, j).times_power(1)).scale(Fraction(1, 2))
    return f.times_power(half * (r - 1) + b).derivative(b).times_power(half * (1 - r))


def rank1_kempf_coeffs(jt: JordanType, lambda_exp: Fraction | int | str) -> list[Fraction]:
    """b_0..b_{p-2}: e^{-nu t^lambda} K(z, z) / nu^{p-1} ~ sum_j b_j / (nu t^lambda)^j for t = (z|z)."""
    if isinstance(lambda_exp, str):
        try:
            lambda_exp = Fraction(lambda_exp)
        except ValueError as exc:
            raise DomainError(f"cannot read {lambda_exp!r} as a rational") from exc
    if isinstance(lambda_exp, float) or not is_rational(lambda_exp):
        raise DomainError("lambda must be given as an exact rational (int, Fraction or 'p/q' string)")
    lam = Fraction(lambda_exp)
    if lam <= 0:
        raise DomainError("lambda must be positive")
    p = Fraction(jt.p)
    if p.denominator != 1:
        raise DomainError("rank-1 expansion needs an integer genus")
    n = int(p) - 2
    start = (2 - p) * lam
    out = _rank1_operator(ExpPolyFunction.monomial(lam, start), jt)
    q = [Fraction(0)] * (n + 1)
    for expo, c in out.terms.items():
        idx = (expo - start) / lam
        if idx.denominator != 1 or not 0 <= idx <= n:
            raise DomainError(f"unexpected exponent {expo} in the operator image")
        q[int(idx)] += c
    lead = lam**n
    if q[n] != lead:
        raise DomainError(f"leading coefficient {q[n]} differs from lambda^(p-2) = {lead}")
    return [q[n - j] / lead for j in range(n + 1)]


def kempf_ratio(spec: KernelSpec, t: float, ctl: SeriesControl) -> float:
    """e^{-nu t^lambda} K(z, z) / nu^{p-1} at (z|z) = t for a rank-1 flat spec."""
    if spec.rank != 1 or not spec.flat:
        raise DomainError("Kempf ratio needs a rank-1 flat spec")
    lam = spec.potential.lambda_exp
    k = kernel_diag(spec, (t,), ctl)
    if not k.converged:
        raise DomainError("kernel series did not converge; raise max_degree")
    log_k = k.log_value().log_abs
    return math.exp(log_k - spec.nu * t**lam - (float(spec.jt.p) - 1) * math.log(spec.nu))


def kempf_expansion(coeffs: Sequence[Fraction], nu: float, t: float, lam: float) -> float:
    x = nu * t**lam
    return math.fsum(float(c) / x**j for j, c in enumerate(coeffs))


# ---------------------------------------------------------------------------
# leading-order TYZ ratios


@dataclass(frozen=True)
class TyzRow:
    nu: float
    ratio: float

    @property
    def scaled_error(self) -> float:
        return abs(self.ratio - 1.0) * self.nu


def tyz_bounded_leading(spec: KernelSpec, t: DiagonalPoint | Sequence[float], nu_list: Sequence[float], ctl: SeriesControl) -> list[TyzRow]:
    """R(nu) = N(c-t)^nu K / (Gamma_l(nu - d''/l)/Gamma_l(nu - d_l/l) nu^{d''}) for each nu.

    The leading polynomial of the expansion cancels in R, so R -> 1 at rate 1/nu.
    """
    if spec.flat:
        raise DomainError("tyz_bounded_leading needs the bounded potential")
    pt = _as_tuple(t)
    ell, a = spec.rank, float(spec.jt.a)
    d2 = float(spec.ell.dsecond_ell)
    dl = float(spec.ell.d_ell)
    log_nc = math.fsum(math.log1p(-x) for x in pt)
    rows = []
    for nu in nu_list:
        s = KernelSpec(spec.jt, ell, Bounded(), nu)
        k = kernel_diag(s, pt, ctl)
        if not k.converged:
            raise DomainError(f"kernel series did not converge at nu={nu}")
        log_norm = log_gindikin_gamma(ell, a, nu - d2 / ell).log_abs - log_gindikin_gamma(ell, a, nu - dl / ell).log_abs
        log_norm += d2 * math.log(nu)
        rows.append(TyzRow(nu, math.exp(k.log_value().log_abs + nu * log_nc - log_norm)))
    return rows


def tyz_flat_leading(spec: KernelSpec, t: DiagonalPoint | Sequence[float], nu_list: Sequence[float], ctl: SeriesControl) -> list[TyzRow]:
    """e^{-nu (t|c)} K / nu^{d_l} for each nu (flat potential, lambda = 1)."""
    if not spec.flat or spec.potential.lambda_exp != 1:
        raise DomainError("tyz_flat_leading needs the flat potential with lambda = 1")
    pt = _as_tuple(t)
    dl = float(spec.ell.d_ell)
    rows = []
    for nu in nu_list:
        k = kernel_diag(KernelSpec(spec.jt, spec.rank, spec.potential, nu), pt, ctl)
        if not k.converged:
            raise DomainError(f"kernel series did not converge at nu={nu}")
        rows.append(TyzRow(nu, math.exp(k.log_value().log_abs - nu * math.fsum(pt) - dl * math.log(nu))))
    return rows


__all__ = [
    "AsymptoticSeries",
    "AsymptoticValue",
    "ExpPolyFunction",
    "TyzRow",
    "asympt_1f1",
    "asympt_1f1_series",
    "asympt_2f1",
    "asympt_2f1_series",
    "kempf_expansion",
    "kempf_ratio",
    "mittag_leffler_asympt",
    "rank1_kempf_coeffs",
    "tyz_bounded_leading",
    "tyz_flat_leading",
]
