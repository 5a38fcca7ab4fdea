"""Moments and reproducing kernels on Kepler manifolds.

A kernel is evaluated at the diagonal point ``sqrt(t)``, where ``t`` lists the
eigenvalues of a point of the rank-``ell`` sub-cone.  Two independent routes
are provided: the Peter-Weyl sum over partitions (``kernel_diag``) using
explicit dimension counts, and the closed hypergeometric forms to which the
universal operator is applied through its eigenvalues.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence, Union

from scipy.special import gammaln

from kepler.cone_measures import RadialDensity, eigenvalue_quadrature
from kepler.hyper_series import SeriesControl, SeriesResult, hyper_pFq, mittag_leffler, sum_shells
from kepler.jack_poly import DiagonalPoint, FockTable, _as_tuple, spherical_phi
from kepler.jordan_core import (
    DomainError,
    JordanType,
    KeplerRank,
    LogValue,
    derive_invariants,
    kernel_prefactor,
    log_dim_full,
    log_gindikin_gamma,
    normalize_partition,
    partitions_of,
    partitions_upto,
    pochhammer_partition,
    sub_cone_type,
    universal_eigenvalue,
)

Partition = tuple[int, ...]


@dataclass(frozen=True)
class Flat:
    """Potential (w|w)^lambda on the whole Kepler manifold."""

    lambda_exp: float = 1.0

    def __post_init__(self) -> None:
        if not self.lambda_exp > 0:
            raise DomainError("flat potential needs lambda > 0")


@dataclass(frozen=True)
class Bounded:
    """Potential -p log Delta(w, w) on the part inside the unit ball."""


Potential = Union[Flat, Bounded]


def bounded_threshold(jt: JordanType, ell: int) -> float:
    """Smallest weight (exclusive) for which the bounded moments are finite."""
    kr = derive_invariants(jt, ell)
    return (ell - 1) * float(jt.a) / 2 + float(kr.d_ell) / ell


@dataclass(frozen=True)
class KernelSpec:
    jt: JordanType
    ell: KeplerRank
    potential: Potential
    nu: float

    def __post_init__(self) -> None:
        if isinstance(self.ell, int):
            object.__setattr__(self, "ell", derive_invariants(self.jt, self.ell))
        if self.ell.jt != self.jt:
            raise DomainError("Kepler rank belongs to a different Jordan type")
        object.__setattr__(self, "nu", float(self.nu))
        if not self.nu > 0:
            raise DomainError("weight nu must be positive")
        if isinstance(self.potential, Bounded):
            need = bounded_threshold(self.jt, self.ell.ell)
            if not self.nu > need:
                raise DomainError(f"bounded potential needs nu > {need:g} for finite moments, got {self.nu:g}")
        elif not isinstance(self.potential, Flat):
            raise DomainError(f"unknown potential {self.potential!r}")

    @property
    def rank(self) -> int:
        return self.ell.ell

    @property
    def flat(self) -> bool:
        return isinstance(self.potential, Flat)

    def sub_type(self) -> JordanType:
        return sub_cone_type(self.jt, self.rank)


def _gamma_ell(spec: KernelSpec, s: float | Sequence[float], shift: float = 0.0) -> LogValue:
    return log_gindikin_gamma(spec.rank, spec.jt.a, s, shift)


def moments_flat(spec: KernelSpec, mu: Sequence[int]) -> LogValue:
    """sigma_mu for the flat potential with exponent lambda."""
    if not spec.flat:
        raise DomainError("moments_flat needs a flat potential")
    mu = normalize_partition(mu, spec.rank)
    lam = spec.potential.lambda_exp
    d_l = float(spec.ell.d_ell)
    k = sum(mu)
    out = kernel_prefactor(spec.jt, spec.rank) * _gamma_ell(spec, mu, d_l / spec.rank)
    log_rest = d_l * math.log(lam) - (d_l + k / lam) * math.log(spec.nu)
    log_rest += float(gammaln(d_l + k / lam) - gammaln(d_l + k))
    return out.scale(log_rest)


def moments_bounded(spec: KernelSpec, mu: Sequence[int]) -> LogValue:
    """sigma_mu for the bounded potential with weight nu."""
    if spec.flat:
        raise DomainError("moments_bounded needs the bounded potential")
    mu = normalize_partition(mu, spec.rank)
    d_l = float(spec.ell.d_ell) / spec.rank
    top = _gamma_ell(spec, spec.nu - d_l) * _gamma_ell(spec, mu, d_l)
    return kernel_prefactor(spec.jt, spec.rank) * top / _gamma_ell(spec, mu, spec.nu)


def moment(spec: KernelSpec, mu: Sequence[int]) -> LogValue:
    out = moments_flat(spec, mu) if spec.flat else moments_bounded(spec, mu)
    if out.sign <= 0:
        raise DomainError(f"non-positive moment at mu={tuple(mu)}")
    return out


@dataclass
class MomentSequence:
    """Lazily filled map partition -> sigma_mu."""

    spec: KernelSpec
    _values: dict[Partition, LogValue] = field(default_factory=dict)

    def __getitem__(self, mu: Sequence[int]) -> LogValue:
        key = normalize_partition(mu, self.spec.rank)
        hit = self._values.get(key)
        if hit is None:
            hit = self._values[key] = moment(self.spec, key)
        return hit

    def items(self, max_degree: int) -> Iterator[tuple[Partition, LogValue]]:
        for mu in partitions_upto(max_degree, self.spec.rank):
            yield mu, self[mu]


# ---------------------------------------------------------------------------
# numerical moments


def radial_density_of(spec: KernelSpec) -> RadialDensity:
    if spec.flat:
        return RadialDensity("flat", spec.jt, spec.rank, spec.potential.lambda_exp, spec.nu)
    return RadialDensity("bounded", spec.jt, spec.rank, nu=spec.nu)


def moment_quadrature(spec: KernelSpec, mu: Sequence[int]) -> float:
    """sigma_mu / sigma_0 by adaptive quadrature in the eigenvalues (ell <= 2).

    The averaged conical function is the spherical polynomial, so the ratio
    is the Phi_mu moment of the radial density.
    """
    mu = normalize_partition(mu, spec.rank)
    rd = radial_density_of(spec)
    a = float(spec.jt.a)
    num = eigenvalue_quadrature(lambda t: spherical_phi(mu, t, a) if mu else 1.0, rd)
    den = eigenvalue_quadrature(lambda t: 1.0, rd)
    return num.value / den.value


# ---------------------------------------------------------------------------
# kernel coefficients


def kernel_coefficient_direct(spec: KernelSpec, mu: Sequence[int], sigma: LogValue | None = None) -> LogValue:
    """(d'_l/l)_mu / sigma_mu * d_mu / d^c_mu, with both dimensions counted directly."""
    mu = normalize_partition(mu, spec.rank)
    sigma = moment(spec, mu) if sigma is None else sigma
    poch = pochhammer_partition(float(spec.ell.dprime_ell) / spec.rank, mu, spec.jt.a)
    log_ratio = log_dim_full(mu, spec.jt) - log_dim_full(mu, spec.sub_type())
    return (poch / sigma).scale(log_ratio)


def kernel_coefficient_spectral(spec: KernelSpec, mu: Sequence[int], sigma: LogValue | None = None) -> LogValue:
    """prefactor * A_mu * Gamma_l(mu + d'_l/l) / sigma_mu."""
    mu = normalize_partition(mu, spec.rank)
    sigma = moment(spec, mu) if sigma is None else sigma
    top = kernel_prefactor(spec.jt, spec.rank) * universal_eigenvalue(mu, spec.jt, spec.rank)
    return top * _gamma_ell(spec, mu, float(spec.ell.dprime_ell) / spec.rank) / sigma


def _check_point(spec: KernelSpec, t: DiagonalPoint | Sequence[float]) -> tuple[float, ...]:
    pt = _as_tuple(t)
    if len(pt) != spec.rank:
        raise DomainError(f"kernel point needs {spec.rank} eigenvalues, got {len(pt)}")
    DiagonalPoint(pt, "cone" if spec.flat else "bounded")
    return pt


def kernel_diag(spec: KernelSpec, t: DiagonalPoint | Sequence[float], ctl: SeriesControl) -> SeriesResult:
    """K(sqrt t, sqrt t) as the Peter-Weyl sum over partitions of length <= ell."""
    pt = _check_point(spec, t)
    fock = FockTable(pt, spec.sub_type())
    moments = MomentSequence(spec)

    def shell(k: int) -> Iterable[LogValue]:
        return [
            kernel_coefficient_direct(spec, mu, moments[mu]) * fock.log_value(mu) for mu in partitions_of(k, spec.rank)
        ]

    return sum_shells(shell, ctl)


def _closed_constant(spec: KernelSpec) -> LogValue:
    ell = spec.rank
    dp = float(spec.ell.dprime_ell) / ell
    dl = float(spec.ell.d_ell) / ell
    if spec.flat:
        lam = spec.potential.lambda_exp
        c = _gamma_ell(spec, dp) / _gamma_ell(spec, dl)
        return c.scale(float(spec.ell.d_ell) * (math.log(spec.nu) - math.log(lam)))
    return _gamma_ell(spec, spec.nu) * _gamma_ell(spec, dp) / (_gamma_ell(spec, spec.nu - dl) * _gamma_ell(spec, dl))


def _closed_series(
    spec: KernelSpec, t: Sequence[float], ctl: SeriesControl, apply_operator: bool
) -> SeriesResult:
    ell = spec.rank
    dp = float(spec.ell.dprime_ell) / ell
    dl = float(spec.ell.d_ell) / ell
    sub = spec.sub_type()
    weights = []
    if apply_operator:
        weights.append(lambda mu: universal_eigenvalue(mu, spec.jt, ell))
    if spec.flat:
        lam = spec.potential.lambda_exp
        point = [spec.nu ** (1.0 / lam) * x for x in t]
        if lam != 1.0:
            d_l = float(spec.ell.d_ell)
            weights.append(lambda mu: LogValue(float(gammaln(d_l + sum(mu)) - gammaln(d_l + sum(mu) / lam)), 1))
        num, den = [dp], [dl]
    else:
        point = list(t)
        num, den = [dp, spec.nu], [dl]

    def weight(mu: Partition) -> LogValue:
        out = LogValue.one()
        for w in weights:
            out = out * w(mu)
        return out

    res = hyper_pFq(num, den, point, sub, ctl, weight=weight if weights else None)
    const = _closed_constant(spec)
    scaled = res.log_value() * const
    shell = LogValue.from_float(res.last_shell_scaled).scale(res.log_scale) * const
    log_scale = scaled.log_abs if scaled.sign else 0.0
    return SeriesResult(
        scaled.sign * 1.0 if scaled.sign else 0.0,
        log_scale,
        shell.sign * math.exp(shell.log_abs - log_scale) if shell.sign else 0.0,
        res.converged,
        res.degrees_used,
    )


def closed_form_flat(spec: KernelSpec, t: DiagonalPoint | Sequence[float], ctl: SeriesControl) -> SeriesResult:
    """The confluent (Mittag-Leffler type for general lambda) function F with K = D F."""
    if not spec.flat:
        raise DomainError("closed_form_flat needs a flat potential")
    pt = _check_point(spec, t)
    if spec.rank == 1:
        lam = spec.potential.lambda_exp
        p1 = float(spec.ell.d_ell)
        res = mittag_leffler(1.0 / lam, p1, spec.nu ** (1.0 / lam) * pt[0], ctl)
        shift = p1 * (math.log(spec.nu) - math.log(lam))
        return SeriesResult(res.scaled, res.log_scale + shift, res.last_shell_scaled, res.converged, res.degrees_used)
    return _closed_series(spec, pt, ctl, apply_operator=False)


def closed_form_bounded(spec: KernelSpec, t: DiagonalPoint | Sequence[float], ctl: SeriesControl) -> SeriesResult:
    """The Gauss-type function F with K = D F for the bounded potential."""
    if spec.flat:
        raise DomainError("closed_form_bounded needs the bounded potential")
    pt = _check_point(spec, t)
    return _closed_series(spec, pt, ctl, apply_operator=False)


def kernel_closed(spec: KernelSpec, t: DiagonalPoint | Sequence[float], ctl: SeriesControl) -> SeriesResult:
    """K(sqrt t, sqrt t) from the closed form, with the universal operator applied spectrally."""
    pt = _check_point(spec, t)
    return _closed_series(spec, pt, ctl, apply_operator=True)


def rank1_kernel_coefficients(spec: KernelSpec, max_degree: int) -> list[LogValue]:
    """d_(m) / sigma_m for m = 0..max_degree (rank-1 kernel in the variable (z|w))."""
    if spec.rank != 1:
        raise DomainError("rank-1 coefficients need ell = 1")
    return [kernel_coefficient_direct(spec, (m,)) for m in range(max_degree + 1)]


__all__ = [
    "Bounded",
    "Flat",
    "KernelSpec",
    "MomentSequence",
    "bounded_threshold",
    "closed_form_bounded",
    "closed_form_flat",
    "kernel_closed",
    "kernel_coefficient_direct",
    "kernel_coefficient_spectral",
    "kernel_diag",
    "moment",
    "moment_quadrature",
    "moments_bounded",
    "moments_flat",
    "radial_density_of",
    "rank1_kernel_coefficients",
]
