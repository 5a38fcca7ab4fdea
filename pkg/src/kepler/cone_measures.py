"""Radial densities, Peirce and tripotent volumes, and eigenvalue quadrature.

Densities are taken against Lebesgue measure in the eigenvalues ``t`` of the
rank-``ell`` sub-cone; the Jacobian ``prod |t_i - t_j|^a`` is applied by the
quadrature, not by ``radial_density``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from scipy import integrate
from scipy.special import gammaln

from kepler.jack_poly import DiagonalPoint, _as_tuple
from kepler.jordan_core import (
    DomainError,
    JordanType,
    LogValue,
    Number,
    derive_invariants,
    kernel_prefactor,
    log_gindikin_gamma,
)

KINDS = ("riemann", "flat", "bounded", "invariant")


@dataclass(frozen=True)
class RadialDensity:
    kind: str
    jt: JordanType
    ell: int
    lambda_exp: float = 1.0
    nu: float | None = None

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise DomainError(f"unknown density kind {self.kind!r}; expected one of {KINDS}")
        derive_invariants(self.jt, self.ell)
        if self.kind in ("flat", "bounded") and (self.nu is None or not self.nu > 0):
            raise DomainError(f"{self.kind} density needs a positive weight nu")
        if self.kind == "flat" and not self.lambda_exp > 0:
            raise DomainError("flat density needs lambda > 0")
        if self.kind == "invariant" and self.jt.b != 0:
            raise DomainError("the invariant measure is only available for tube types (b = 0)")

    @property
    def domain(self) -> str:
        return "bounded" if self.kind == "bounded" else "cone"


def _log_density_fn(rd: RadialDensity) -> Callable[[Sequence[float]], float]:
    # constants are computed once; the returned function does no validation
    kr = derive_invariants(rd.jt, rd.ell)
    ell = rd.ell
    const = kernel_prefactor(rd.jt, ell).log_abs
    d_l = float(kr.d_ell)
    n_pow = float(kr.dsecond_ell) / ell
    if rd.kind == "riemann":
        const += d_l * math.log(math.pi)
    elif rd.kind == "invariant":
        const += d_l * math.log(math.pi)
        n_pow = float(rd.jt.a) * rd.jt.r / 2 - float(kr.dprime_ell) / ell
    elif rd.kind == "flat":
        lam, nu = rd.lambda_exp, rd.nu
        const += (d_l + 1) * math.log(lam)

        def flat(t: Sequence[float]) -> float:
            s = math.fsum(t)
            return const + n_pow * math.fsum(map(math.log, t)) + d_l * (lam - 1) * math.log(s) - nu * s**lam

        return flat
    else:
        expo = rd.nu - float(rd.jt.p)

        def bounded(t: Sequence[float]) -> float:
            return const + n_pow * math.fsum(map(math.log, t)) + expo * math.fsum(math.log1p(-x) for x in t)

        return bounded

    def power(t: Sequence[float]) -> float:
        return const + n_pow * math.fsum(map(math.log, t))

    return power


def log_radial_density(rd: RadialDensity, t: DiagonalPoint | Sequence[float]) -> float:
    pt = _as_tuple(t)
    if len(pt) != rd.ell:
        raise DomainError(f"density point needs {rd.ell} eigenvalues, got {len(pt)}")
    DiagonalPoint(pt, rd.domain)
    return _log_density_fn(rd)(pt)


def radial_density(rd: RadialDensity, t: DiagonalPoint | Sequence[float]) -> float:
    return math.exp(log_radial_density(rd, t))


# ---------------------------------------------------------------------------
# volumes (reduced by the relevant power of pi)


def peirce_volume(jt: JordanType, ell: int) -> LogValue:
    """|M_ell| / pi^{d''_ell}."""
    kr = derive_invariants(jt, ell)
    return kernel_prefactor(jt, ell) * log_gindikin_gamma(ell, jt.a, float(kr.dprime_ell) / ell)


def tripotent_volume(jt: JordanType, ell: int) -> LogValue:
    """|S_ell| including the power of pi."""
    kr = derive_invariants(jt, ell)
    return kernel_prefactor(jt, ell).scale(float(kr.dprime_ell) * math.log(2) + float(kr.d_ell) * math.log(math.pi))


def conformal_volume(jt: JordanType) -> LogValue:
    """|Z^| / pi^d for the compact dual."""
    return log_gindikin_gamma(jt.r, jt.a, float(jt.dprime_over_r)) / log_gindikin_gamma(jt.r, jt.a, float(jt.p))


def invariant_measure_power(jt: JordanType, ell: int) -> Number:
    """k with riemann / invariant radial density = N(t)^k (tube types; the constant is 1).

    k = (p - a ell) / 2, which equals d_ell/ell - a r/2 when b = 0.
    """
    derive_invariants(jt, ell)
    if jt.b != 0:
        raise DomainError("the invariant measure is only available for tube types (b = 0)")
    return _half(jt.p - jt._q(jt.a) * ell)


def holomorphic_form_exponent(jt: JordanType, ell: int) -> Number:
    """Exponent of N(u) in the holomorphic top form: a(r - ell) - k."""
    return jt._q(jt.a) * (jt.r - ell) - invariant_measure_power(jt, ell)


def _half(x: Number) -> Number:
    q = x / 2
    if isinstance(q, Fraction) and q.denominator == 1:
        return int(q)
    return q


# ---------------------------------------------------------------------------
# quadrature


@dataclass(frozen=True)
class QuadResult:
    value: float
    error: float


def _split_points(rd: RadialDensity) -> list[float]:
    if rd.kind == "bounded":
        return [0.0, 0.5, 1.0]
    if rd.kind != "flat":
        raise DomainError("quadrature needs an integrable density (flat or bounded)")
    kr = derive_invariants(rd.jt, rd.ell)
    peak = (float(kr.d_ell) / (rd.nu * rd.lambda_exp)) ** (1.0 / rd.lambda_exp)
    return [0.0, peak, 4 * peak, math.inf]


def eigenvalue_quadrature(
    f: Callable[[tuple[float, ...]], float], rd: RadialDensity, tol: float | None = None
) -> QuadResult:
    """Integral of f(t) * density(t) * prod_{i<j} (t_i - t_j)^a over t_1 > ... > t_ell.

    Only ``ell <= 2``; the second eigenvalue is written as ``u * t_1``.
    """
    if rd.ell > 2:
        raise DomainError("eigenvalue quadrature is limited to ell <= 2")
    need = 1e-9 if rd.ell == 1 else 1e-7
    tol = 1e-11 if tol is None else tol
    opts = dict(epsabs=0.0, epsrel=tol, limit=400)
    cuts = _split_points(rd)
    a = float(rd.jt.a)
    log_density = _log_density_fn(rd)

    def radial(g: Callable[[float], float]) -> tuple[float, float]:
        val, err = 0.0, 0.0
        for lo, hi in zip(cuts, cuts[1:]):
            v, e = integrate.quad(g, lo, hi, **opts)
            val += v
            err += e
        return val, err

    if rd.ell == 1:

        def g1(x: float) -> float:
            if x <= 0 or (rd.kind == "bounded" and x >= 1):
                return 0.0
            return f((x,)) * math.exp(log_density((x,)))

        val, err = radial(g1)
    else:
        inner_err = [0.0]

        def inner(u: float) -> float:
            if not 0 < u < 1:
                return 0.0

            def g2(x: float) -> float:
                if x <= 0 or (rd.kind == "bounded" and x >= 1):
                    return 0.0
                pt = (x, u * x)
                return f(pt) * math.exp(log_density(pt)) * ((1 - u) * x) ** a * x

            v, e = radial(g2)
            inner_err[0] = max(inner_err[0], e / abs(v) if v else 0.0)
            return v

        val, err = integrate.quad(inner, 0.0, 1.0, **opts)
        err += inner_err[0] * abs(val)
    if not math.isfinite(val):
        raise DomainError("eigenvalue quadrature did not converge")
    if val and err / abs(val) > need:
        raise DomainError(f"eigenvalue quadrature missed tolerance {need:g} (relative error {err / abs(val):.2e})")
    return QuadResult(val, err)


# ---------------------------------------------------------------------------
# the case-by-case volume identities


def _lg(x: float) -> float:
    return float(gammaln(x))


def _gind(r: int, a: float, s: float) -> float:
    return log_gindikin_gamma(r, a, s).log_abs if r > 0 else 0.0


def _gind_ratio(r: int, a: float, top: float, bottom: float) -> float:
    return _gind(r, a, top) - _gind(r, a, bottom)


def _full_matrix_volume(m: int, n: int) -> float:
    """log reduced conformal volume of m x n complex matrices (zero if empty)."""
    lo, hi = min(m, n), max(m, n)
    if lo == 0:
        return 0.0
    return conformal_volume(JordanType(lo, 2, hi - lo)).log_abs


@dataclass(frozen=True)
class VolumeIdentity:
    """One chain of equal expressions, each given as a log value."""

    label: str
    sides: tuple[tuple[str, float], ...]

    def max_deviation(self) -> float:
        ref = self.sides[0][1]
        return max(abs(v - ref) / max(1.0, abs(ref)) for _, v in self.sides)


def _symmetric_case(r: int, ell: int) -> VolumeIdentity:
    jt = JordanType(r, 1, 0)
    i_range = range(1, ell + 1)
    sides = [
        ("peirce_volume", peirce_volume(jt, ell).log_abs),
        (
            "gindikin a=1",
            _gind(ell, 1, (ell + 1) / 2) + _gind(ell, 1, ell / 2) - _gind(ell, 1, (r + 1) / 2) - _gind(ell, 1, r / 2),
        ),
        (
            "gamma product",
            math.fsum(
                _lg((ell + 1) / 2 - (i - 1) / 2) + _lg(ell / 2 - (i - 1) / 2) - _lg((r + 1) / 2 - (i - 1) / 2) - _lg(r / 2 - (i - 1) / 2)
                for i in i_range
            ),
        ),
        (
            "duplicated product",
            ell * (r - ell) * math.log(2) + math.fsum(_lg(ell + 1 - i) - _lg(r + 1 - i) for i in i_range),
        ),
        ("gindikin a=2 rank ell", ell * (r - ell) * math.log(2) + _gind_ratio(ell, 2, ell, r)),
        ("gindikin a=2 rank r-ell", ell * (r - ell) * math.log(2) + _gind_ratio(r - ell, 2, r - ell, r)),
        ("conformal volume of Z_c^1", ell * (r - ell) * math.log(2) + _full_matrix_volume(ell, r - ell)),
    ]
    return VolumeIdentity(f"sym:{r} ell={ell}", tuple(sides))


def _full_case(r: int, s: int, ell: int) -> VolumeIdentity:
    jt = JordanType(r, 2, s - r)
    sides = [
        ("peirce_volume", peirce_volume(jt, ell).log_abs),
        ("gindikin rank ell", _gind_ratio(ell, 2, ell, s) + _gind_ratio(ell, 2, ell, r)),
        ("mixed ranks", _gind_ratio(ell, 2, ell, s) + _gind_ratio(r - ell, 2, r - ell, r)),
        ("complementary ranks", _gind_ratio(s - ell, 2, s - ell, s) + _gind_ratio(r - ell, 2, r - ell, r)),
        ("conformal volume of Z_c^1", _full_matrix_volume(ell, s - ell) + _full_matrix_volume(r - ell, ell)),
    ]
    return VolumeIdentity(f"full:{r},{s} ell={ell}", tuple(sides))


def _antisymmetric_case(n: int, ell: int) -> VolumeIdentity:
    r, eps = divmod(n, 2)
    jt = JordanType(r, 4, 2 * eps)
    sides = [
        ("peirce_volume", peirce_volume(jt, ell).log_abs),
        (
            "gindikin a=4",
            _gind(ell, 4, 2 * ell - 1) + _gind(ell, 4, 2 * ell) - _gind(ell, 4, 2 * r - 1 + 2 * eps) - _gind(ell, 4, 2 * r),
        ),
        (
            "gamma product",
            math.fsum(
                _lg(2 * ell - 1 - 2 * (i - 1)) + _lg(2 * ell - 2 * (i - 1)) - _lg(2 * r - 1 + 2 * eps - 2 * (i - 1)) - _lg(2 * r - 2 * (i - 1))
                for i in range(1, ell + 1)
            ),
        ),
        ("merged product", math.fsum(_lg(2 * ell + 1 - j) - _lg(2 * r + eps + 1 - j) for j in range(1, 2 * ell + 1))),
        ("gindikin a=2 rank 2ell", _gind_ratio(2 * ell, 2, 2 * ell, n)),
        ("gindikin a=2 rank n-2ell", _gind_ratio(n - 2 * ell, 2, n - 2 * ell, n)),
        ("conformal volume of Z_c^1", _full_matrix_volume(2 * ell, n - 2 * ell)),
    ]
    return VolumeIdentity(f"asym:{n} ell={ell}", tuple(sides))


def _spin_case(dim: int) -> VolumeIdentity:
    jt = JordanType(2, dim - 2, 0)
    a = dim - 2
    sides = [
        ("peirce_volume", peirce_volume(jt, 1).log_abs),
        ("gindikin rank 1", _gind(1, a, 1) + _gind(1, a, dim / 2 - 1) - _gind(1, a, dim / 2) - _gind(1, a, dim - 2)),
        ("gamma quotient", _lg(1) + _lg(dim / 2 - 1) - _lg(dim / 2) - _lg(dim - 2)),
        ("gindikin a=d-4 rank 2", _gind_ratio(2, dim - 4, dim / 2 - 1, dim - 2)),
        ("conformal volume of Z_c^1", conformal_volume(JordanType(2, dim - 4, 0)).log_abs),
    ]
    return VolumeIdentity(f"spin:{dim} ell=1", tuple(sides))


def _exceptional_cases() -> list[VolumeIdentity]:
    e16 = JordanType(2, 6, 4)
    e27 = JordanType(3, 8, 0)
    return [
        VolumeIdentity(
            "exc:16 ell=1",
            (
                ("peirce_volume", peirce_volume(e16, 1).log_abs),
                ("gindikin rank 1", _gind(1, 6, 3) + _gind(1, 6, 1) - _gind(1, 6, 8) - _gind(1, 6, 6)),
                ("gamma quotient", _lg(3) + _lg(1) - _lg(8) - _lg(6)),
                ("gindikin a=4 rank 2", _gind_ratio(2, 4, 3, 8)),
                ("conformal volume of Z_c^1", conformal_volume(JordanType(2, 4, 2)).log_abs),
            ),
        ),
        VolumeIdentity(
            "exc:16 ell=2",
            (
                ("peirce_volume", peirce_volume(e16, 2).log_abs),
                ("gindikin rank 2", _gind(2, 6, 4) + _gind(2, 6, 6) - _gind(2, 6, 8) - _gind(2, 6, 6)),
                ("reduced", _gind_ratio(2, 6, 4, 8)),
                ("conformal volume of Z_c^1", conformal_volume(JordanType(2, 6, 0)).log_abs),
            ),
        ),
        VolumeIdentity(
            "exc:27 ell=1",
            (
                ("peirce_volume", peirce_volume(e27, 1).log_abs),
                ("gindikin rank 1", _gind(1, 8, 1) + _gind(1, 8, 4) - _gind(1, 8, 9) - _gind(1, 8, 12)),
                ("gindikin rank 2", _gind(2, 8, 5) + _gind(2, 8, 8) - _gind(2, 8, 9) - _gind(2, 8, 12)),
                ("gamma quotient", _lg(1) + _lg(4) - _lg(9) - _lg(12)),
                ("gindikin a=6 rank 2", _gind_ratio(2, 6, 4, 12)),
                ("conformal volume of Z_c^1", conformal_volume(e16).log_abs),
            ),
        ),
        VolumeIdentity(
            "exc:27 ell=2",
            (
                ("peirce_volume", peirce_volume(e27, 2).log_abs),
                ("gindikin rank 2", _gind(2, 8, 5) + _gind(2, 8, 8) - _gind(2, 8, 9) - _gind(2, 8, 12)),
                ("gamma quotient", _lg(1) + _lg(4) - _lg(9) - _lg(12)),
                ("conformal volume of Z_c^1", conformal_volume(e16).log_abs),
            ),
        ),
    ]


def _product_relation(n: int, ell: int) -> VolumeIdentity:
    # holds for the Gamma products without the (2 pi) normalization
    def bare(rank: int, s: float) -> float:
        return math.fsum(_lg(s - j) for j in range(rank))

    return VolumeIdentity(
        f"product relation n={n} ell={ell}",
        (
            ("G_l(l) G_(n-l)(n)", bare(ell, ell) + bare(n - ell, n)),
            ("G_n(n)", bare(n, n)),
            ("G_(n-l)(n-l) G_l(n)", bare(n - ell, n - ell) + bare(ell, n)),
        ),
    )


def volume_identity_cases(max_rank: int = 10, max_asym: int = 20, max_spin: int = 20) -> list[VolumeIdentity]:
    """All case-by-case chains equating the Peirce volume with the conformal volume of Z_c^1."""
    cases: list[VolumeIdentity] = []
    for r in range(1, max_rank + 1):
        cases.extend(_symmetric_case(r, ell) for ell in range(1, r + 1))
        for s in range(r, max_rank + 1):
            cases.extend(_full_case(r, s, ell) for ell in range(1, r + 1))
    for n in range(4, max_asym + 1):
        cases.extend(_antisymmetric_case(n, ell) for ell in range(1, n // 2 + 1))
    cases.extend(_spin_case(dim) for dim in range(5, max_spin + 1))
    cases.extend(_exceptional_cases())
    for n in range(1, max_rank + 3):
        cases.extend(_product_relation(n, ell) for ell in range(0, n + 1))
    return cases


__all__ = [
    "KINDS",
    "QuadResult",
    "RadialDensity",
    "VolumeIdentity",
    "conformal_volume",
    "eigenvalue_quadrature",
    "holomorphic_form_exponent",
    "invariant_measure_power",
    "log_radial_density",
    "peirce_volume",
    "radial_density",
    "tripotent_volume",
    "volume_identity_cases",
]
