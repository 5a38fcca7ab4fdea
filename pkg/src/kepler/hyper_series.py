"""Truncated hypergeometric series of a diagonal matrix argument.

Terms are grouped into shells of fixed total degree.  Each shell is summed with
``math.fsum`` relative to a running log scale, so large arguments (where the
sum itself exceeds the float range) are still handled: ``SeriesResult`` keeps
the value as ``scaled * exp(log_scale)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from scipy.special import gammaln, gammasgn

from kepler.jack_poly import DiagonalPoint, FockTable, _as_tuple
from kepler.jordan_core import (
    DomainError,
    JordanType,
    LogValue,
    normalize_partition,
    partitions_of,
    pochhammer_partition,
)

Partition = tuple[int, ...]
TermWeight = Callable[[Partition], LogValue]


@dataclass(frozen=True)
class SeriesControl:
    max_degree: int = 60
    abs_tol: float = 1e-15
    rel_tol: float = 1e-14

    def __post_init__(self) -> None:
        if self.max_degree < 0:
            raise DomainError("max_degree must be non-negative")
        if not (self.abs_tol > 0 and self.rel_tol > 0):
            raise DomainError("tolerances must be positive")

    def small(self, shell: float, value: float) -> bool:
        return abs(shell) <= max(self.abs_tol, self.rel_tol * abs(value))


@dataclass(frozen=True)
class SeriesResult:
    """Truncated series value ``scaled * exp(log_scale)``.

    ``last_shell`` is the contribution of the final degree summed, on the same
    scale as ``value``.
    """

    scaled: float
    log_scale: float
    last_shell_scaled: float
    converged: bool
    degrees_used: int
    asymptotic_only: bool = False

    @property
    def value(self) -> float:
        if self.scaled == 0:
            return 0.0
        return math.copysign(math.exp(math.log(abs(self.scaled)) + self.log_scale), self.scaled)

    @property
    def last_shell(self) -> float:
        if self.last_shell_scaled == 0:
            return 0.0
        return math.copysign(math.exp(math.log(abs(self.last_shell_scaled)) + self.log_scale), self.last_shell_scaled)

    def log_value(self) -> LogValue:
        return LogValue.from_float(self.scaled).scale(self.log_scale)


def sum_shells(
    shells: Callable[[int], Iterable[LogValue]],
    ctl: SeriesControl,
    *,
    start: int = 0,
    allow_stop: Callable[[int], bool] | None = None,
    asymptotic_only: bool = False,
) -> SeriesResult:
    """Sum ``shells(k)`` for k = start..max_degree with shell-level stopping.

    Stops once two consecutive shells are below tolerance (and ``allow_stop``
    agrees).  Asymptotic-only sums never report convergence.
    """
    log_scale: float | None = None
    acc: list[float] = []
    total = 0.0
    prev_small = False
    shell_val = 0.0
    k = start
    for k in range(start, ctl.max_degree + 1):
        terms = [t for t in shells(k) if t.sign != 0]
        shell_val = 0.0
        if terms:
            top = max(t.log_abs for t in terms)
            if log_scale is None:
                log_scale = top
            elif top > log_scale + 30:
                acc = [v * math.exp(log_scale - top) for v in acc]
                log_scale = top
            shell_val = math.fsum(t.sign * math.exp(t.log_abs - log_scale) for t in terms)
        acc.append(shell_val)
        total = math.fsum(acc)
        small = ctl.small(shell_val, total)
        if small and prev_small and not asymptotic_only and (allow_stop is None or allow_stop(k)):
            return SeriesResult(total, log_scale or 0.0, shell_val, True, k - start + 1)
        prev_small = small
    converged = ctl.small(shell_val, total) and not asymptotic_only
    return SeriesResult(total, log_scale or 0.0, shell_val, converged, k - start + 1, asymptotic_only)


def _log_param_product(params: Sequence[float], mu: Partition, a: float) -> LogValue:
    out = LogValue.one()
    for s in params:
        out = out * pochhammer_partition(s, mu, a)
    return out


def hyper_pFq(
    num: Sequence[float],
    den: Sequence[float],
    t: DiagonalPoint | Sequence[float],
    jt: JordanType,
    ctl: SeriesControl,
    *,
    weight: TermWeight | None = None,
    asymptotic_only: bool = False,
) -> SeriesResult:
    """sum_mu prod (num_i)_mu / prod (den_j)_mu * E^mu_e(t), truncated by degree.

    ``weight`` multiplies each term by an extra factor depending on mu; this is
    how diagonal operators are applied to a series term by term.
    """
    p, q = len(num), len(den)
    pt = _as_tuple(t)
    if len(pt) > jt.r:
        raise DomainError(f"point has {len(pt)} entries but the rank is {jt.r}")
    if p > q + 1 and not asymptotic_only:
        raise DomainError(f"{p}F{q} has an empty domain of convergence; pass asymptotic_only=True for a formal sum")
    if p == q + 1 and max((abs(x) for x in pt), default=0.0) >= 1:
        raise DomainError("pFq with p = q + 1 needs max |t_i| < 1")
    a = float(jt.a)
    num = [float(x) for x in num]
    den = [float(x) for x in den]
    fock = FockTable(pt, jt)
    r_eff = min(jt.r, sum(1 for x in pt if x != 0)) or 1

    def shell(k: int) -> Iterable[LogValue]:
        out = []
        for mu in partitions_of(k, r_eff):
            bottom = _log_param_product(den, mu, a)
            if bottom.sign == 0:
                raise DomainError(f"denominator Pochhammer vanishes at mu={mu}")
            term = _log_param_product(num, mu, a) / bottom
            if term.sign == 0:
                continue
            term = term * fock.log_value(mu)
            if weight is not None:
                term = term * weight(normalize_partition(mu))
            out.append(term)
        return out

    return sum_shells(shell, ctl, asymptotic_only=asymptotic_only or p > q + 1)


def mittag_leffler(A: float, B: float, s: float, ctl: SeriesControl) -> SeriesResult:
    """E_{A,B}(s) = sum_m s^m / Gamma(A m + B); terms at Gamma poles vanish."""
    if not A > 0:
        raise DomainError("Mittag-Leffler needs A > 0")
    s = float(s)
    log_s = math.log(abs(s)) if s != 0 else -math.inf
    sgn_s = -1 if s < 0 else 1
    # terms grow until A m + B passes roughly |s|^(1/A); never stop before that
    peak = abs(s) ** (1.0 / A) / A if s != 0 else 0.0

    def shell(m: int) -> Iterable[LogValue]:
        x = A * m + B
        if x <= 0 and float(x).is_integer():
            return []
        if m > 0 and s == 0:
            return []
        return [LogValue(m * log_s - float(gammaln(x)) if m else -float(gammaln(x)), (sgn_s**m) * int(gammasgn(x)))]

    return sum_shells(shell, ctl, allow_stop=lambda m: m > peak and A * m + B > 0)


__all__ = ["SeriesControl", "SeriesResult", "hyper_pFq", "mittag_leffler", "sum_shells"]
