"""Spherical polynomials and Fock components at diagonal points.

Spherical polynomials are Jack polynomials with parameter ``alpha = 2/a``
normalized to take the value 1 at ``e = (1, ..., 1)``.  They are evaluated by
the branching recursion over horizontal strips,

    J_k(x_1..x_n) = sum_mu J_mu(x_1..x_{n-1}) x_n^{|k/mu|} beta_{k mu},

carried out directly on the normalized functions so that nothing overflows.
Points are rescaled so that ``max |t_i| = 1`` before evaluation.
"""

from __future__ import annotations

import itertools
import math
import os
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from kepler.jordan_core import (
    DomainError,
    JordanType,
    LogValue,
    dim_full,
    log_dim_full,
    normalize_partition,
    partitions_of,
    pochhammer_exact,
    pochhammer_partition,
)

Partition = tuple[int, ...]


def _cache_entries() -> int:
    # roughly 200 bytes per cached coefficient
    try:
        mb = float(os.environ.get("CACHE_MB", "64"))
    except ValueError:
        mb = 64.0
    return max(1024, int(mb * 1e6 / 200))


@dataclass(frozen=True)
class DiagonalPoint:
    """Eigenvalue vector of an invariant cone point."""

    t: tuple[float, ...]
    domain: str = "free"

    def __post_init__(self) -> None:
        object.__setattr__(self, "t", tuple(float(x) for x in self.t))
        if self.domain == "cone" and not all(x > 0 for x in self.t):
            raise DomainError(f"cone point needs t_i > 0, got {self.t}")
        if self.domain == "bounded" and not all(0 < x < 1 for x in self.t):
            raise DomainError(f"bounded point needs 0 < t_i < 1, got {self.t}")
        if self.domain not in ("cone", "bounded", "free"):
            raise DomainError(f"unknown domain flag {self.domain!r}")

    def __len__(self) -> int:
        return len(self.t)


def _as_tuple(t: DiagonalPoint | Sequence[float]) -> tuple[float, ...]:
    if isinstance(t, DiagonalPoint):
        return t.t
    return tuple(float(x) for x in t)


def _conjugate(kappa: Partition) -> Partition:
    if not kappa:
        return ()
    return tuple(sum(1 for k in kappa if k > j) for j in range(kappa[0]))


def _log_j_at_ones(kappa: Partition, alpha: float, n: int) -> float:
    # J_k(1^n) = prod over cells (n - i + 1 + alpha (j - 1)), 1-based cells
    out = 0.0
    for i, ki in enumerate(kappa):
        for j in range(ki):
            out += math.log(n - i + alpha * j)
    return out


@lru_cache(maxsize=_cache_entries())
def _log_branch_coefficient(kappa: Partition, mu: Partition, alpha: float, n: int) -> float:
    """log of beta_{k mu} J_mu(1^{n-1}) / J_k(1^n)."""
    kc = _conjugate(kappa)
    mc = _conjugate(mu)
    log_beta = 0.0
    for nu, nc, sgn in ((kappa, kc, 1.0), (mu, mc, -1.0)):
        for i, ni in enumerate(nu):
            for j in range(ni):
                same = (kc[j] if j < len(kc) else 0) == (mc[j] if j < len(mc) else 0)
                arm = ni - j - 1
                leg = nc[j] - i - 1
                h = leg + alpha * (arm + 1) if same else leg + 1 + alpha * arm
                log_beta += sgn * math.log(h)
    return log_beta + _log_j_at_ones(mu, alpha, n - 1) - _log_j_at_ones(kappa, alpha, n)


def _interlacing(kappa: Partition, n: int) -> Iterable[Partition]:
    # mu with at most n-1 parts and kappa_1 >= mu_1 >= kappa_2 >= ... >= kappa_n
    k = list(kappa) + [0] * (n - len(kappa))
    ranges = [range(k[i + 1], k[i] + 1) for i in range(n - 1)]
    for combo in itertools.product(*ranges):
        yield normalize_partition(combo)


@lru_cache(maxsize=4096)
def _one_row_coefficients(k: int, alpha: float) -> tuple[float, ...]:
    # Phi_(k)(x1, x2) = sum_j c_j x1^j x2^(k-j); c_j proportional to (1/a)_j (1/a)_{k-j} / (j!(k-j)!)
    inv = 1.0 / alpha
    logs = []
    for j in range(k + 1):
        logs.append(
            math.lgamma(inv + j) - math.lgamma(j + 1) + math.lgamma(inv + k - j) - math.lgamma(k - j + 1)
        )
    top = max(logs)
    w = [math.exp(v - top) for v in logs]
    total = math.fsum(w)
    return tuple(v / total for v in w)


class PhiTable:
    """Spherical polynomials at one point, memoized over partitions.

    ``scaled(mu)`` returns Phi_mu(t / rho) with ``rho = max |t_i|``, so the
    true value is ``rho**|mu| * scaled(mu)``.
    """

    def __init__(self, t: DiagonalPoint | Sequence[float], a: float, general: bool = False):
        self.t = _as_tuple(t)
        if not self.t:
            raise DomainError("empty diagonal point")
        self.n = len(self.t)
        self.a = float(a)
        self.alpha = 2.0 / self.a
        rho = max(abs(x) for x in self.t)
        self.rho = rho if rho > 0 else 1.0
        self.log_rho = math.log(self.rho)
        self.x = tuple(x / self.rho for x in self.t)
        self._general = general
        self._memo: dict[tuple[Partition, int], float] = {}

    def scaled(self, mu: Sequence[int]) -> float:
        mu = normalize_partition(mu)
        if len(mu) > self.n:
            raise DomainError(f"partition {mu} longer than the point ({self.n} entries)")
        return self._phi(mu, self.n)

    def value(self, mu: Sequence[int]) -> float:
        mu = normalize_partition(mu)
        return self.scaled(mu) * self.rho ** sum(mu)

    def log_abs_sign(self, mu: Sequence[int]) -> LogValue:
        mu = normalize_partition(mu)
        return LogValue.from_float(self.scaled(mu)).scale(sum(mu) * self.log_rho)

    def _phi(self, kappa: Partition, n: int) -> float:
        if len(kappa) > n:
            return 0.0
        if not kappa:
            return 1.0
        key = (kappa, n)
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        x = self.x
        if n == 1:
            val = x[0] ** kappa[0]
        elif len(kappa) == n:
            low = kappa[-1]
            val = math.prod(x[:n]) ** low * self._phi(normalize_partition([k - low for k in kappa]), n)
        elif n == 2 and not self._general:
            c = _one_row_coefficients(kappa[0], self.alpha)
            x1, x2 = x[0], x[1]
            k = kappa[0]
            val = math.fsum(cj * x1**j * x2 ** (k - j) for j, cj in enumerate(c))
        else:
            xn = x[n - 1]
            weight = sum(kappa)
            terms = []
            for mu in _interlacing(kappa, n):
                step = weight - sum(mu)
                if step and xn == 0:
                    continue
                coef = math.exp(_log_branch_coefficient(kappa, mu, self.alpha, n))
                terms.append(coef * self._phi(mu, n - 1) * xn**step)
            val = math.fsum(terms)
        self._memo[key] = val
        return val


def spherical_phi(mu: Sequence[int], t: DiagonalPoint | Sequence[float], a: float) -> float:
    """Phi_mu(t), normalized so that Phi_mu(1, ..., 1) = 1."""
    return PhiTable(t, a).value(mu)


def _padded(t: DiagonalPoint | Sequence[float], r: int) -> tuple[float, ...]:
    vals = _as_tuple(t)
    if len(vals) > r:
        raise DomainError(f"point has {len(vals)} entries but the rank is {r}")
    return vals + (0.0,) * (r - len(vals))


class FockTable:
    """Fock components E^mu_e(t) = d_mu/(d/r)_mu Phi_mu(t) at one point, in log form."""

    def __init__(self, t: DiagonalPoint | Sequence[float], jt: JordanType):
        self.jt = jt
        self.phi = PhiTable(_padded(t, jt.r), float(jt.a))
        self._dr = float(jt.d_over_r)

    def log_coefficient(self, mu: Partition) -> LogValue:
        """log of d_mu / (d/r)_mu."""
        poch = pochhammer_partition(self._dr, mu, self.jt.a)
        if poch.sign == 0:
            raise DomainError(f"(d/r)_mu vanishes at mu={mu}")
        return LogValue(log_dim_full(mu, self.jt), 1) / poch

    def log_value(self, mu: Sequence[int]) -> LogValue:
        mu = normalize_partition(mu, self.jt.r)
        return self.log_coefficient(mu) * self.phi.log_abs_sign(mu)

    def value(self, mu: Sequence[int]) -> float:
        return self.log_value(mu).value()


def fock_component(mu: Sequence[int], t: DiagonalPoint | Sequence[float], jt: JordanType) -> float:
    """E^mu_e(t); points shorter than the rank are padded with zeros."""
    return FockTable(t, jt).value(mu)


# ---------------------------------------------------------------------------
# exact evaluation and Pieri coefficients


@lru_cache(maxsize=_cache_entries())
def _branch_coefficient_exact(kappa: Partition, mu: Partition, alpha: Fraction, n: int) -> Fraction:
    kc = _conjugate(kappa)
    mc = _conjugate(mu)
    out = Fraction(1)
    for nu, nc, up in ((kappa, kc, True), (mu, mc, False)):
        for i, ni in enumerate(nu):
            for j in range(ni):
                same = (kc[j] if j < len(kc) else 0) == (mc[j] if j < len(mc) else 0)
                arm = ni - j - 1
                leg = nc[j] - i - 1
                h = leg + alpha * (arm + 1) if same else leg + 1 + alpha * arm
                out = out * h if up else out / h
    for i, mi in enumerate(mu):
        for j in range(mi):
            out *= n - 1 - i + alpha * j
    for i, ki in enumerate(kappa):
        for j in range(ki):
            out /= n - i + alpha * j
    return out


class ExactPhiTable:
    """Spherical polynomials at a rational point with rational ``a``, in exact arithmetic."""

    def __init__(self, t: Sequence[Fraction], a: Fraction | int):
        self.x = tuple(Fraction(v) for v in t)
        self.n = len(self.x)
        self.alpha = Fraction(2) / Fraction(a)
        self._memo: dict[tuple[Partition, int], Fraction] = {}

    def value(self, mu: Sequence[int]) -> Fraction:
        return self._phi(normalize_partition(mu), self.n)

    def _phi(self, kappa: Partition, n: int) -> Fraction:
        if len(kappa) > n:
            return Fraction(0)
        if not kappa:
            return Fraction(1)
        key = (kappa, n)
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        xn = self.x[n - 1]
        if n == 1:
            val = xn ** kappa[0]
        else:
            val = Fraction(0)
            weight = sum(kappa)
            for mu in _interlacing(kappa, n):
                val += _branch_coefficient_exact(kappa, mu, self.alpha, n) * self._phi(mu, n - 1) * xn ** (weight - sum(mu))
        self._memo[key] = val
        return val


def _solve_exact(rows: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction]:
    """Gaussian elimination on an overdetermined consistent system; raises if singular or inconsistent."""
    m = [row[:] + [b] for row, b in zip(rows, rhs)]
    ncol = len(rows[0])
    piv_row = 0
    for col in range(ncol):
        pivot = next((i for i in range(piv_row, len(m)) if m[i][col] != 0), None)
        if pivot is None:
            raise DomainError("Pieri system is singular at the chosen sample points")
        m[piv_row], m[pivot] = m[pivot], m[piv_row]
        inv = 1 / m[piv_row][col]
        m[piv_row] = [v * inv for v in m[piv_row]]
        for i in range(len(m)):
            if i != piv_row and m[i][col] != 0:
                f = m[i][col]
                m[i] = [vi - f * vp for vi, vp in zip(m[i], m[piv_row])]
        piv_row += 1
    if any(row[-1] != 0 for row in m[ncol:]):
        raise DomainError("Pieri system is inconsistent")
    return [m[i][-1] for i in range(ncol)]


def _contains(big: Partition, small: Partition) -> bool:
    return len(small) <= len(big) and all(s <= b for s, b in zip(small, big))


def _elementary(x: Sequence, i: int):
    return sum((math.prod(c) for c in itertools.combinations(x, i)), start=x[0] * 0)


_PIERI_SEED = 20240917


def _fock_coefficient_exact(mu: Partition, jt: JordanType) -> Fraction:
    return Fraction(dim_full(mu, jt)) / pochhammer_exact(jt.d_over_r, mu, jt.a)


def pieri_coefficients(mu: Sequence[int], jt: JordanType, cond_limit: float = 1e10) -> dict[Partition, float]:
    """Coefficients C_nu^mu of N(e - x) E^mu_e(x) = sum_nu C_nu^mu E^nu_e(x).

    Solved degree by degree, since N(e - x) = sum_i (-1)^i e_i(x).  Rational
    types are solved exactly at rational sample points; otherwise by least
    squares with a condition-number guard.  Coefficients outside ``mu <= nu``
    are fitted too and must vanish; the returned map holds the support.
    """
    mu = normalize_partition(mu, jt.r)
    if sum(mu) > 12:
        raise DomainError("Pieri expansion is limited to |mu| <= 12")
    if jt.exact:
        return {nu: float(c) for nu, c in pieri_coefficients_exact(mu, jt).items()}
    r = jt.r
    rng = np.random.default_rng(_PIERI_SEED + 31 * sum(mu) + len(mu))
    out: dict[Partition, float] = {}
    for i in range(r + 1):
        basis = list(partitions_of(sum(mu) + i, r))
        n_pts = 3 * len(basis) + 6
        pts = rng.uniform(0.05, 1.0, size=(n_pts, r))
        design = np.empty((n_pts, len(basis)))
        rhs = np.empty(n_pts)
        for row, p in enumerate(pts):
            table = FockTable(p, jt)
            design[row] = [table.value(nu) for nu in basis]
            rhs[row] = (-1) ** i * _elementary(list(p), i) * table.value(mu)
        scale = np.linalg.norm(design, axis=0)
        cond = float(np.linalg.cond(design / scale))
        if not np.isfinite(cond) or cond > cond_limit:
            raise DomainError(f"Pieri system ill-conditioned (condition number {cond:.3e})")
        sol, *_ = np.linalg.lstsq(design / scale, rhs, rcond=None)
        sol = sol / scale
        ref = max(1.0, float(np.max(np.abs(sol))))
        for nu, c in zip(basis, sol):
            if _contains(nu, mu):
                out[nu] = float(c)
            elif abs(c) > 1e-7 * ref:
                raise DomainError(f"Pieri coefficient outside mu <= nu: nu={nu}, C={c:.3e}")
    return out


def pieri_coefficients_exact(mu: Sequence[int], jt: JordanType) -> dict[Partition, Fraction]:
    """Exact Pieri coefficients for rational multiplicities."""
    mu = normalize_partition(mu, jt.r)
    if not jt.exact:
        raise DomainError("exact Pieri coefficients need rational a and b")
    r = jt.r
    out: dict[Partition, Fraction] = {}
    for i in range(r + 1):
        basis = list(partitions_of(sum(mu) + i, r))
        n_pts = len(basis) + 3
        rows, rhs = [], []
        for k in range(n_pts):
            p = [Fraction(2 + k + 3 * j * j, 5 + 2 * j + k * (j + 1)) for j in range(r)]
            table = ExactPhiTable(p, jt.a)
            rows.append([_fock_coefficient_exact(nu, jt) * table.value(nu) for nu in basis])
            rhs.append((-1) ** i * _elementary(p, i) * _fock_coefficient_exact(mu, jt) * table.value(mu))
        sol = _solve_exact(rows, rhs)
        for nu, c in zip(basis, sol):
            if _contains(nu, mu):
                out[nu] = c
            elif c != 0:
                raise DomainError(f"Pieri coefficient outside mu <= nu: nu={nu}, C={c}")
    return out


def pieri_identity_residual(
    nu: Sequence[int], jt: JordanType, gamma: float, coeffs: dict[Partition, dict[Partition, float | Fraction]]
) -> float:
    """sum_mu C_nu^mu (gamma)_mu - (gamma - 1)_nu, given ``coeffs[mu][nu]``.

    With exact coefficients and a rational type the sum is formed in exact
    arithmetic at the binary value of ``gamma``, so the result only reflects
    the coefficients themselves.
    """
    nu = normalize_partition(nu, jt.r)
    exact = jt.exact and all(isinstance(c, Fraction) for row in coeffs.values() for c in row.values())
    if exact:
        g = Fraction(gamma)
        acc = Fraction(0)
        for mu, row in coeffs.items():
            c = row.get(nu)
            if c:
                acc += c * pochhammer_exact(g, mu, jt.a)
        return float(acc - pochhammer_exact(g - 1, nu, jt.a))
    total = []
    for mu, row in coeffs.items():
        c = row.get(nu)
        if c:
            total.append(float(c) * pochhammer_partition(gamma, mu, jt.a).value())
    return math.fsum(total) - pochhammer_partition(gamma - 1, nu, jt.a).value()


__all__ = [
    "DiagonalPoint",
    "FockTable",
    "ExactPhiTable",
    "PhiTable",
    "fock_component",
    "pieri_coefficients",
    "pieri_coefficients_exact",
    "pieri_identity_residual",
    "spherical_phi",
]
