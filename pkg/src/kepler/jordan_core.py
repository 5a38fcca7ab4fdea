"""Jordan-type invariants, partitions and Gamma/Pochhammer arithmetic.

Everything downstream is parameterized by a triple ``(r, a, b)``: the rank,
the Peirce multiplicity and the characteristic multiplicity of a hermitian
Jordan triple.  Gamma-type quantities are carried as :class:`LogValue` so that
products over long partitions never overflow.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from importlib import resources
from numbers import Rational
from typing import Iterator, Sequence

from scipy.special import gammaln, gammasgn

Number = int | float | Fraction


class DomainError(ValueError):
    """Argument outside the domain of an operation."""


class PoleError(DomainError):
    """A Gamma factor hit a pole."""

    def __init__(self, index: int, argument: float):
        super().__init__(f"Gamma pole at component j={index} (argument {argument!r})")
        self.index = index
        self.argument = argument


def _canon(x: Number) -> Number:
    # integral floats become ints so rational fast paths apply
    if isinstance(x, float) and x.is_integer():
        return int(x)
    return x


def is_rational(x: Number) -> bool:
    return isinstance(x, Rational)


@dataclass(frozen=True)
class JordanType:
    """Rank ``r``, Peirce multiplicity ``a`` and characteristic multiplicity ``b``."""

    r: int
    a: Number
    b: Number = 0

    def __post_init__(self) -> None:
        if int(self.r) != self.r or self.r < 1:
            raise DomainError(f"rank must be a positive integer, got {self.r!r}")
        if self.a <= 0:
            raise DomainError(f"Peirce multiplicity must be positive, got {self.a!r}")
        if self.b < 0:
            raise DomainError(f"characteristic multiplicity must be >= 0, got {self.b!r}")
        object.__setattr__(self, "r", int(self.r))
        object.__setattr__(self, "a", _canon(self.a))
        object.__setattr__(self, "b", _canon(self.b))

    @property
    def exact(self) -> bool:
        return is_rational(self.a) and is_rational(self.b)

    def _q(self, x: Number) -> Number:
        return Fraction(x) if self.exact else float(x)

    @property
    def half_a(self) -> Number:
        return self._q(self.a) / 2

    @property
    def d_over_r(self) -> Number:
        """d/r = 1 + (a/2)(r-1) + b."""
        return 1 + self.half_a * (self.r - 1) + self.b

    @property
    def dprime_over_r(self) -> Number:
        """d'/r = 1 + (a/2)(r-1), the tube-type part."""
        return 1 + self.half_a * (self.r - 1)

    @property
    def d(self) -> Number:
        return _canon_q(self.r * self.d_over_r)

    @property
    def dprime(self) -> Number:
        return _canon_q(self.r * self.dprime_over_r)

    @property
    def genus(self) -> Number:
        """p = 2 + a(r-1) + b."""
        return _canon_q(2 + self._q(self.a) * (self.r - 1) + self.b)

    p = genus

    @property
    def classified(self) -> bool:
        return is_classified(self)

    @property
    def tube(self) -> bool:
        return self.b == 0


def _canon_q(x: Number) -> Number:
    if isinstance(x, Fraction) and x.denominator == 1:
        return int(x)
    return _canon(x)


def is_classified(jt: JordanType) -> bool:
    """True for the triples realized by irreducible hermitian Jordan triples."""
    r, a, b = jt.r, jt.a, jt.b
    if not (is_rational(a) and is_rational(b)):
        return False
    if isinstance(b, Fraction) or isinstance(a, Fraction):
        return False
    if r == 1:
        return True
    if a == 1 and b == 0:
        return True
    if a == 2:
        return True
    if a == 4 and b in (0, 2):
        return True
    if r == 2 and b == 0:
        return True
    return (r, a, b) in {(2, 6, 4), (3, 8, 0)}


@lru_cache(maxsize=1)
def classified_table() -> tuple[tuple[str, JordanType], ...]:
    """The shipped table of named classified types."""
    text = resources.files("kepler").joinpath("data/jordan_types.json").read_text()
    rows = json.loads(text)["types"]
    return tuple((row["name"], JordanType(row["r"], row["a"], row["b"])) for row in rows)


def parse_type_name(name: str) -> JordanType:
    """Map ``sym:r``, ``full:r,s``, ``asym:n``, ``spin:d``, ``exc:16``, ``exc:27`` to a type."""
    try:
        family, _, arg = name.strip().partition(":")
        nums = [int(x) for x in arg.split(",")] if arg else []
    except ValueError as exc:
        raise DomainError(f"malformed type name {name!r}") from exc
    if family == "sym" and len(nums) == 1 and nums[0] >= 1:
        return JordanType(nums[0], 1, 0)
    if family == "full" and len(nums) == 2 and 1 <= nums[0] <= nums[1]:
        return JordanType(nums[0], 2, nums[1] - nums[0])
    if family == "asym" and len(nums) == 1 and nums[0] >= 2:
        n = nums[0]
        return JordanType(n // 2, 4, 2 * (n % 2))
    if family == "spin" and len(nums) == 1 and nums[0] >= 3:
        return JordanType(2, nums[0] - 2, 0)
    if family == "exc" and nums == [16]:
        return JordanType(2, 6, 4)
    if family == "exc" and nums == [27]:
        return JordanType(3, 8, 0)
    raise DomainError(f"unknown type name {name!r}")


@dataclass(frozen=True)
class KeplerRank:
    """Dimensions attached to the rank-``ell`` Kepler manifold."""

    jt: JordanType
    ell: int
    d_ell: Number
    dprime_ell: Number
    dsecond_ell: Number

    @property
    def codimension(self) -> Number:
        """d_ell - d_{ell-1} = 1 + b + a(r - ell)."""
        return _canon_q(1 + self.jt.b + self.jt._q(self.jt.a) * (self.jt.r - self.ell))


def derive_invariants(jt: JordanType, ell: int) -> KeplerRank:
    if int(ell) != ell or not 1 <= ell <= jt.r:
        raise DomainError(f"Kepler rank must satisfy 1 <= ell <= {jt.r}, got {ell!r}")
    ell = int(ell)
    a = jt._q(jt.a)
    dprime = ell * (1 + a / 2 * (ell - 1))
    dsecond = ell * (a * (jt.r - ell) + jt.b)
    return KeplerRank(jt, ell, _canon_q(dprime + dsecond), _canon_q(dprime), _canon_q(dsecond))


# ---------------------------------------------------------------------------
# log-space scalars


@dataclass(frozen=True)
class LogValue:
    """``sign * exp(log_abs)``; ``sign == 0`` encodes an exact zero."""

    log_abs: float
    sign: int = 1

    @classmethod
    def from_float(cls, x: float) -> "LogValue":
        if x == 0:
            return cls(-math.inf, 0)
        return cls(math.log(abs(x)), 1 if x > 0 else -1)

    @classmethod
    def one(cls) -> "LogValue":
        return cls(0.0, 1)

    def __mul__(self, other: "LogValue") -> "LogValue":
        if self.sign == 0 or other.sign == 0:
            return LogValue(-math.inf, 0)
        return LogValue(self.log_abs + other.log_abs, self.sign * other.sign)

    def __truediv__(self, other: "LogValue") -> "LogValue":
        if other.sign == 0:
            raise ZeroDivisionError("division by an exact zero LogValue")
        if self.sign == 0:
            return self
        return LogValue(self.log_abs - other.log_abs, self.sign * other.sign)

    def __pow__(self, k: int) -> "LogValue":
        if self.sign == 0:
            return self if k > 0 else LogValue(0.0, 1)
        return LogValue(self.log_abs * k, self.sign if k % 2 else 1)

    def inverse(self) -> "LogValue":
        return LogValue.one() / self

    def scale(self, log_factor: float) -> "LogValue":
        return self if self.sign == 0 else LogValue(self.log_abs + log_factor, self.sign)

    def value(self) -> float:
        if self.sign == 0:
            return 0.0
        return self.sign * math.exp(self.log_abs)

    __float__ = value


def log_gamma_signed(x: float) -> LogValue:
    x = float(x)
    if x <= 0 and x.is_integer():
        raise PoleError(1, x)
    return LogValue(float(gammaln(x)), int(gammasgn(x)))


def _as_vector(s: Number | Sequence[Number], r: int) -> list[float]:
    if isinstance(s, (int, float, Fraction)):
        return [float(s)] * r
    vec = [float(x) for x in s]
    if len(vec) < r:
        vec += [0.0] * (r - len(vec))
    if len(vec) != r:
        raise DomainError(f"expected at most {r} components, got {len(vec)}")
    return vec


def log_gindikin_gamma(r: int, a: Number, s: Number | Sequence[Number], shift: Number = 0) -> LogValue:
    """Gindikin Gamma ``(2 pi)^{r(r-1)a/4} prod_j Gamma(s_j - (j-1)a/2)``.

    A scalar ``s`` is broadcast to all components; ``shift`` is added to each
    component, so ``log_gindikin_gamma(r, a, mu, shift=s)`` is Gamma_r(mu + s).
    """
    vec = _as_vector(s, r)
    half_a = float(a) / 2
    out = LogValue(r * (r - 1) * float(a) / 4 * math.log(2 * math.pi), 1)
    for j, sj in enumerate(vec):
        x = sj + float(shift) - j * half_a
        if x <= 0 and float(x).is_integer():
            raise PoleError(j + 1, x)
        out = out * LogValue(float(gammaln(x)), int(gammasgn(x)))
    return out


def log_rising(x: float, m: int) -> LogValue:
    """Classical rising factorial ``(x)_m`` in log space; exact zeros allowed."""
    if m == 0:
        return LogValue.one()
    x = float(x)
    if x > 0:
        return LogValue(float(gammaln(x + m) - gammaln(x)), 1)
    if x.is_integer():
        if m > -x:
            return LogValue(-math.inf, 0)
        acc = LogValue.one()
        for k in range(m):
            acc = acc * LogValue.from_float(x + k)
        return acc
    return LogValue(float(gammaln(x + m) - gammaln(x)), int(gammasgn(x + m) * gammasgn(x)))


def pochhammer_partition(s: Number, mu: Sequence[int], a: Number, r: int | None = None) -> LogValue:
    """Generalized Pochhammer ``prod_j (s - (j-1)a/2)_{m_j}``."""
    mu = tuple(mu)
    if r is not None and len(mu) > r:
        raise DomainError(f"partition {mu} longer than rank {r}")
    half_a = float(a) / 2
    out = LogValue.one()
    for j, m in enumerate(mu):
        out = out * log_rising(float(s) - j * half_a, m)
        if out.sign == 0:
            break
    return out


def rising_exact(x: Fraction, m: int) -> Fraction:
    acc = Fraction(1)
    for k in range(m):
        acc *= x + k
    return acc


def pochhammer_exact(s: Number, mu: Sequence[int], a: Number) -> Fraction:
    half_a = Fraction(a) / 2
    acc = Fraction(1)
    for j, m in enumerate(mu):
        acc *= rising_exact(Fraction(s) - j * half_a, m)
    return acc


# ---------------------------------------------------------------------------
# partitions


def normalize_partition(mu: Sequence[int], length: int | None = None) -> tuple[int, ...]:
    parts = tuple(int(m) for m in mu)
    if any(m < 0 for m in parts) or any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
        raise DomainError(f"not a partition: {tuple(mu)}")
    while parts and parts[-1] == 0:
        parts = parts[:-1]
    if length is not None and len(parts) > length:
        raise DomainError(f"partition {parts} has more than {length} parts")
    return parts


def partitions_of(k: int, max_len: int, max_part: int | None = None) -> Iterator[tuple[int, ...]]:
    """Partitions of ``k`` with at most ``max_len`` parts, lex descending."""
    if max_part is None:
        max_part = k
    if k == 0:
        yield ()
        return
    if max_len == 0:
        return
    for first in range(min(k, max_part), 0, -1):
        if first * max_len < k:
            break
        for rest in partitions_of(k - first, max_len - 1, first):
            yield (first,) + rest


def partitions_upto(max_degree: int, max_len: int) -> Iterator[tuple[int, ...]]:
    """Graded lexicographic order: by weight, then lex descending."""
    for k in range(max_degree + 1):
        yield from partitions_of(k, max_len)


# ---------------------------------------------------------------------------
# dimensions


def _rising_ratio_log(x: float, y: float, n: Number) -> float:
    # log[(x)_n / (y)_n] for real n >= 0 via Gamma quotients
    return float(gammaln(x + n) - gammaln(x) - gammaln(y + n) + gammaln(y))


def dim_tube(mu: Sequence[int], a: Number, r: int) -> Number:
    """Tube-type dimension d'_mu; exact ``Fraction`` for rational ``a``."""
    mu = normalize_partition(mu, r)
    m = list(mu) + [0] * (r - len(mu))
    a = _canon(a)
    if isinstance(a, int):
        half_a = Fraction(a, 2)
        acc = Fraction(1)
        for i in range(r):
            for j in range(i + 1, r):
                gap = m[i] - m[j]
                acc *= (gap + half_a * (j - i)) / (half_a * (j - i))
                acc *= rising_exact(gap + 1 + half_a * (j - i - 1), a - 1)
                acc /= rising_exact(1 + half_a * (j - i - 1), a - 1)
        return _canon_q(acc)
    half_a = float(a) / 2
    log_acc = 0.0
    for i in range(r):
        for j in range(i + 1, r):
            gap = m[i] - m[j]
            log_acc += math.log((gap + half_a * (j - i)) / (half_a * (j - i)))
            log_acc += _rising_ratio_log(gap + 1 + half_a * (j - i - 1), 1 + half_a * (j - i - 1), float(a) - 1)
    return math.exp(log_acc)


def dim_full(mu: Sequence[int], jt: JordanType) -> Number:
    """d_mu = (d/r)_mu / (d'/r)_mu * d'_mu."""
    mu = normalize_partition(mu, jt.r)
    tube = dim_tube(mu, jt.a, jt.r)
    if jt.exact and not isinstance(tube, float):
        ratio = pochhammer_exact(jt.d_over_r, mu, jt.a) / pochhammer_exact(jt.dprime_over_r, mu, jt.a)
        return _canon_q(ratio * tube)
    ratio = pochhammer_partition(jt.d_over_r, mu, jt.a) / pochhammer_partition(jt.dprime_over_r, mu, jt.a)
    return ratio.value() * float(tube)


def log_dim_full(mu: Sequence[int], jt: JordanType) -> float:
    """log d_mu without forming big rationals."""
    mu = normalize_partition(mu, jt.r)
    m = list(mu) + [0] * (jt.r - len(mu))
    half_a = float(jt.a) / 2
    out = 0.0
    for i in range(jt.r):
        for j in range(i + 1, jt.r):
            gap = m[i] - m[j]
            out += math.log((gap + half_a * (j - i)) / (half_a * (j - i)))
            out += _rising_ratio_log(gap + 1 + half_a * (j - i - 1), 1 + half_a * (j - i - 1), float(jt.a) - 1)
    ratio = pochhammer_partition(jt.d_over_r, mu, jt.a) / pochhammer_partition(jt.dprime_over_r, mu, jt.a)
    return out + ratio.log_abs


# ---------------------------------------------------------------------------
# universal operator spectrum


def universal_eigenvalue(mu: Sequence[int], jt: JordanType, ell: int) -> LogValue:
    """A_mu = G(mu+d/r) G(mu+ar/2) / (G(mu+d'_l/l) G(mu+al/2)) with G = Gamma_ell."""
    kr = derive_invariants(jt, ell)
    mu = normalize_partition(mu, ell)
    a = float(jt.a)
    num = log_gindikin_gamma(ell, a, mu, float(jt.d_over_r)) * log_gindikin_gamma(ell, a, mu, a * jt.r / 2)
    den = log_gindikin_gamma(ell, a, mu, float(kr.dprime_ell) / ell) * log_gindikin_gamma(ell, a, mu, a * ell / 2)
    return num / den


def bracket_eigenvalue(lam: Number, mu: Sequence[int], a: Number, ell: int) -> float:
    """Eigenvalue of D_lambda on E_c^mu: prod_i (lambda + (a/2)(ell-1) + m_i - (a/2)(i-1))."""
    mu = normalize_partition(mu, ell)
    m = list(mu) + [0] * (ell - len(mu))
    half_a = float(a) / 2
    beta = float(lam) + half_a * (ell - 1)
    out = 1.0
    for i, mi in enumerate(m):
        out *= beta + mi - half_a * i
    return out


def operator_factor_shifts(jt: JordanType, ell: int) -> list[float]:
    """Parameters lambda of the first-order factors D_lambda of the universal operator.

    Requires integer multiplicities; the factor list has length
    ``b + (r - ell) * a``, i.e. the operator has order d''_ell.
    """
    a, b = _canon(jt.a), _canon(jt.b)
    if not (isinstance(a, int) and isinstance(b, int)):
        raise DomainError("factorization into D_lambda needs integer a and b")
    r = jt.r
    shifts = [t + a / 2 * (r - ell) for t in range(1, b + 1)]
    for j in range(ell + 1, r + 1):
        shifts.append(a / 2 * (j - ell))
        shifts.extend(s + a / 2 * (j - ell - 1) for s in range(1, a))
    return shifts


def universal_eigenvalue_factored(mu: Sequence[int], jt: JordanType, ell: int) -> LogValue:
    """A_mu as the product of bracket eigenvalues over the D_lambda factor list."""
    out = LogValue.one()
    for lam in operator_factor_shifts(jt, ell):
        out = out * LogValue.from_float(bracket_eigenvalue(lam, mu, jt.a, ell))
    return out


def sub_cone_type(jt: JordanType, ell: int) -> JordanType:
    """Type (ell, a, 0) of the Peirce 2-space Z_c^2 of a rank-ell tripotent."""
    derive_invariants(jt, ell)
    return JordanType(ell, jt.a, 0)


def kernel_prefactor(jt: JordanType, ell: int) -> LogValue:
    """Gamma_l(a l/2) / (Gamma_l(d/r) Gamma_l(a r/2))."""
    a = float(jt.a)
    return log_gindikin_gamma(ell, a, a * ell / 2) / (
        log_gindikin_gamma(ell, a, float(jt.d_over_r)) * log_gindikin_gamma(ell, a, a * jt.r / 2)
    )


__all__ = [
    "DomainError",
    "JordanType",
    "KeplerRank",
    "LogValue",
    "PoleError",
    "bracket_eigenvalue",
    "classified_table",
    "derive_invariants",
    "dim_full",
    "dim_tube",
    "is_classified",
    "kernel_prefactor",
    "log_dim_full",
    "log_gindikin_gamma",
    "log_rising",
    "normalize_partition",
    "operator_factor_shifts",
    "parse_type_name",
    "partitions_of",
    "partitions_upto",
    "pochhammer_exact",
    "pochhammer_partition",
    "sub_cone_type",
    "universal_eigenvalue",
    "universal_eigenvalue_factored",
]
