"""Exact arithmetic in Z[zeta] for zeta a primitive 2**(t+1)-th root of unity.

Elements live on the power basis 1, zeta, ..., zeta**(2**t - 1) with integer
coefficients and the reduction zeta**(2**t) = -1.  The basis comes from an
irreducible polynomial, so an element is zero exactly when its coefficient
vector is zero; every vanishing test in this module is therefore exact integer
arithmetic, never floating point.

The root-of-unity sums computed here decide which factors survive in the
minimal characteristic polynomial of an exponential-sum sequence: slot t = 0
stands for the root 2 (factor x - 2) and slot t >= 1 for the orbit of the
roots 1 + zeta with zeta primitive of order 2**(t+1).
"""

from __future__ import annotations

from typing import NamedTuple, Sequence

from .bitcombinatorics import R_MAX_DEFAULT, DegreeSet, sign_exponents
from .errors import DegenerateDegreeSetError, ResourceLimitError


class CyclotomicInt:
    """Element of Z[zeta], zeta = exp(pi*i / 2**level), on the power basis."""

    __slots__ = ("level", "coeffs")

    def __init__(self, level: int, coeffs: Sequence[int]):
        if level < 0:
            raise ValueError("level must be nonnegative")
        if len(coeffs) != 1 << level:
            raise ValueError(f"level {level} needs exactly {1 << level} coefficients")
        object.__setattr__(self, "level", level)
        object.__setattr__(self, "coeffs", tuple(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("CyclotomicInt is immutable")

    @classmethod
    def zero(cls, level: int) -> "CyclotomicInt":
        return cls(level, (0,) * (1 << level))

    @classmethod
    def from_int(cls, level: int, value: int) -> "CyclotomicInt":
        coeffs = [0] * (1 << level)
        coeffs[0] = value
        return cls(level, coeffs)

    @classmethod
    def zeta_power(cls, level: int, exponent: int) -> "CyclotomicInt":
        """zeta**exponent reduced into the basis."""
        n = 1 << level
        q, i = divmod(exponent % (2 * n), n)
        coeffs = [0] * n
        coeffs[i] = -1 if q else 1
        return cls(level, coeffs)

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def __bool__(self) -> bool:
        return not self.is_zero

    def __eq__(self, other) -> bool:
        if not isinstance(other, CyclotomicInt):
            return NotImplemented
        return self.level == other.level and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.level, self.coeffs))

    def __repr__(self) -> str:
        return f"CyclotomicInt(level={self.level}, coeffs={self.coeffs})"

    def _check_level(self, other: "CyclotomicInt") -> None:
        if self.level != other.level:
            raise ValueError("operands live in different cyclotomic rings")

    def __add__(self, other: "CyclotomicInt") -> "CyclotomicInt":
        self._check_level(other)
        return CyclotomicInt(self.level, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other: "CyclotomicInt") -> "CyclotomicInt":
        self._check_level(other)
        return CyclotomicInt(self.level, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self) -> "CyclotomicInt":
        return CyclotomicInt(self.level, [-a for a in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, int):
            return CyclotomicInt(self.level, [a * other for a in self.coeffs])
        if not isinstance(other, CyclotomicInt):
            return NotImplemented
        self._check_level(other)
        n = 1 << self.level
        # Negacyclic convolution: zeta**n = -1.
        out = [0] * n
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                if b == 0:
                    continue
                idx = i + j
                if idx < n:
                    out[idx] += a * b
                else:
                    out[idx - n] -= a * b
        return CyclotomicInt(self.level, out)

    def __rmul__(self, other):
        return self * other

    def __pow__(self, exponent: int) -> "CyclotomicInt":
        if exponent < 0:
            raise ValueError("negative powers are not defined here")
        result = CyclotomicInt.from_int(self.level, 1)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def times_zeta_power(self, exponent: int) -> "CyclotomicInt":
        """Multiply by zeta**exponent (a basis rotation, cheaper than __mul__)."""
        n = 1 << self.level
        out = [0] * n
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            q, idx = divmod(i + exponent % (2 * n), n)
            out[idx] += -a if q & 1 else a
        return CyclotomicInt(self.level, out)

    def conjugate(self) -> "CyclotomicInt":
        """Image under zeta -> zeta**(-1) (complex conjugation)."""
        n = 1 << self.level
        out = [0] * n
        out[0] = self.coeffs[0]
        for i in range(1, n):
            out[n - i] = -self.coeffs[i]
        return CyclotomicInt(self.level, out)

    def promote(self, level: int) -> "CyclotomicInt":
        """Embed into the ring at a higher level via zeta_old = zeta_new**2**d."""
        if level < self.level:
            raise ValueError("cannot demote to a smaller ring")
        stride = 1 << (level - self.level)
        out = [0] * (1 << level)
        for i, a in enumerate(self.coeffs):
            out[i * stride] = a
        return CyclotomicInt(level, out)

    def evaluate(self, ctx):
        """Numeric value as a pair (real, imag) in the given mpmath context."""
        step = ctx.pi / (1 << self.level)
        re = ctx.mpf(0)
        im = ctx.mpf(0)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            re += a * ctx.cos(i * step)
            im += a * ctx.sin(i * step)
        return re, im


class ScaledCoefficient(NamedTuple):
    """Exact coefficient numerator together with its power-of-two denominator."""

    numerator: CyclotomicInt
    scale: int


def _signed_table(K: DegreeSet, r_max: int) -> tuple[int, list[int]]:
    """(-1)**sign_exponent(m, K) for m in [0, 2**r), guarded by r_max."""
    r = K.period_exponent
    if r < 2:
        raise DegenerateDegreeSetError(
            "degree set {1} has no cyclotomic structure; sums and limits remain available"
        )
    if r > r_max:
        raise ResourceLimitError(
            f"period exponent {r} exceeds the enumeration cap r_max={r_max}"
        )
    return r, [1 - 2 * e for e in sign_exponents(K, 1 << r)]


def _orbit_from_signs(signs: list[int], t: int) -> CyclotomicInt:
    if t == 0:
        return CyclotomicInt(0, (sum(signs),))
    n = 1 << t
    period = n << 1
    coeffs = [0] * n
    for m, s in enumerate(signs):
        idx = m & (period - 1)
        if idx < n:
            coeffs[idx] += s
        else:
            coeffs[idx - n] -= s
    return CyclotomicInt(t, coeffs)


def orbit_sum(K: DegreeSet, t: int, *, r_max: int = R_MAX_DEFAULT) -> CyclotomicInt:
    """Signed root-of-unity sum over one period, reduced into the level-t basis.

    For t >= 1 this is sum of (-1)**e(m) * zeta**m with zeta primitive of order
    2**(t+1); it vanishes exactly when the whole orbit of roots 1 + zeta drops
    out of the minimal characteristic polynomial.  Slot t = 0 uses zeta = 1 and
    returns the length-1 vector holding 2**r times the limiting correlation.
    """
    r, signs = _signed_table(K, r_max)
    if not 0 <= t <= r - 1:
        raise ValueError(f"orbit level t={t} outside [0, {r - 1}]")
    return _orbit_from_signs(signs, t)


def orbit_sums(K: DegreeSet, *, r_max: int = R_MAX_DEFAULT) -> tuple[CyclotomicInt, ...]:
    """All orbit sums t = 0..r-1, sharing a single sign-table sweep."""
    r, signs = _signed_table(K, r_max)
    return tuple(_orbit_from_signs(signs, t) for t in range(r))


def is_zero_orbit(K: DegreeSet, t: int, *, r_max: int = R_MAX_DEFAULT) -> bool:
    """Whether the whole coefficient orbit at level t vanishes (exact test)."""
    return orbit_sum(K, t, r_max=r_max).is_zero


def closed_form_coefficient(
    K: DegreeSet, j: int, *, r_max: int = R_MAX_DEFAULT
) -> ScaledCoefficient:
    """Exact coefficient of (1 + zeta_j)**n in the closed form, scaled by 2**r.

    zeta_j = exp(pi*i*j / 2**(r-1)).  The numerator lives at level r - 1, i.e.
    in Z[zeta] for zeta the primitive 2**r-th root of unity, and the true
    coefficient is numerator / scale.
    """
    r, signs = _signed_table(K, r_max)
    period = 1 << r
    if not 0 <= j < period:
        raise ValueError(f"coefficient index j={j} outside [0, {period})")
    n = period >> 1
    coeffs = [0] * n
    for i, s in enumerate(signs):
        q, idx = divmod((-i * j) % period, n)
        if q:
            coeffs[idx] -= s
        else:
            coeffs[idx] += s
    return ScaledCoefficient(CyclotomicInt(r - 1, coeffs), period)


def alternating_orbit_sum(K: DegreeSet, *, r_max: int = R_MAX_DEFAULT) -> int:
    """Signed sum against zeta = -1, i.e. 2**r times the coefficient of 0**n.

    The closed form carries a 0**n term that only contributes at n = 0; its
    coefficient decides whether recurrences already hold on windows touching
    the n = 0 value or only one step later.
    """
    _, signs = _signed_table(K, r_max)
    return sum(s if m % 2 == 0 else -s for m, s in enumerate(signs))
