"""Arbitrary-precision arithmetic kernel and the trigonometric oracle.

Every value is a :class:`BigReal`: an MPFR float tagged with its working
precision in bits.  The field operations (+, -, *, /) and sqrt/arctan are
correctly rounded at the result precision (MPFR semantics); binary
operations carry the minimum of the operand precisions unless a precision
is raised explicitly with :meth:`BigReal.at_precision`.

The oracle functions are deliberately self-contained so the rest of the
package can be checked against code that shares no logic with it:

* :func:`reference_pi` sums a Machin arctangent series in plain integer
  fixed point (no vendored constant);
* :func:`sin_pi` / :func:`cos_pi` reduce a dyadic multiple of pi against
  :func:`reference_pi` and then run a Taylor series.

Guard-bit policy: public operations work internally at ``precision_bits +
32`` and round exactly once on return.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass

import gmpy2
from gmpy2 import mpfr

MIN_PRECISION_BITS = 64
GUARD_BITS = 32

__all__ = [
    "MIN_PRECISION_BITS",
    "GUARD_BITS",
    "PrecisionError",
    "BigReal",
    "PiRational",
    "arctan_recip",
    "reference_pi",
    "sin_pi",
    "cos_pi",
]


class PrecisionError(ValueError):
    """A requested working precision is below the supported minimum."""


def require_precision(precision_bits: int) -> None:
    if precision_bits < MIN_PRECISION_BITS:
        raise PrecisionError(
            f"precision_bits must be at least {MIN_PRECISION_BITS}, got {precision_bits}"
        )


class BigReal:
    """Immutable real number with an explicit working precision in bits.

    Wraps an MPFR float; all arithmetic exposed here is correctly rounded.
    Instances are safe to share across threads.
    """

    __slots__ = ("_value", "_precision_bits")

    def __init__(self, value: "int | float | str | mpfr | BigReal", precision_bits: int):
        if precision_bits < 2:
            raise ValueError(f"precision_bits must be >= 2, got {precision_bits}")
        if isinstance(value, BigReal):
            value = value._value
        with gmpy2.context(precision=precision_bits):
            self._value = mpfr(value)
        self._precision_bits = precision_bits

    @classmethod
    def _wrap(cls, value: mpfr, precision_bits: int) -> "BigReal":
        # value must already be rounded at precision_bits by the caller
        obj = object.__new__(cls)
        obj._value = value
        obj._precision_bits = precision_bits
        return obj

    @property
    def value(self) -> mpfr:
        """The underlying MPFR float (read-only)."""
        return self._value

    @property
    def precision_bits(self) -> int:
        return self._precision_bits

    def at_precision(self, precision_bits: int) -> "BigReal":
        """Re-round to a new working precision; the only way precision is
        ever raised."""
        return BigReal(self._value, precision_bits)

    # -- arithmetic (correctly rounded at min operand precision) ------------

    def _coerce(self, other):
        # ints and floats are exact dyadics, so they inherit self's precision
        if isinstance(other, BigReal):
            return other._value, min(self._precision_bits, other._precision_bits)
        if isinstance(other, (int, float)):
            return other, self._precision_bits
        return None, 0

    def __add__(self, other):
        ov, bits = self._coerce(other)
        if ov is None:
            return NotImplemented
        with gmpy2.context(precision=bits):
            return BigReal._wrap(self._value + ov, bits)

    __radd__ = __add__

    def __sub__(self, other):
        ov, bits = self._coerce(other)
        if ov is None:
            return NotImplemented
        with gmpy2.context(precision=bits):
            return BigReal._wrap(self._value - ov, bits)

    def __rsub__(self, other):
        ov, bits = self._coerce(other)
        if ov is None:
            return NotImplemented
        with gmpy2.context(precision=bits):
            return BigReal._wrap(ov - self._value, bits)

    def __mul__(self, other):
        ov, bits = self._coerce(other)
        if ov is None:
            return NotImplemented
        with gmpy2.context(precision=bits):
            return BigReal._wrap(self._value * ov, bits)

    __rmul__ = __mul__

    def __truediv__(self, other):
        ov, bits = self._coerce(other)
        if ov is None:
            return NotImplemented
        with gmpy2.context(precision=bits):
            return BigReal._wrap(self._value / ov, bits)

    def __rtruediv__(self, other):
        ov, bits = self._coerce(other)
        if ov is None:
            return NotImplemented
        with gmpy2.context(precision=bits):
            return BigReal._wrap(ov / self._value, bits)

    def __neg__(self):
        with gmpy2.context(precision=self._precision_bits):
            return BigReal._wrap(-self._value, self._precision_bits)

    def __abs__(self):
        with gmpy2.context(precision=self._precision_bits):
            return BigReal._wrap(abs(self._value), self._precision_bits)

    def sqrt(self) -> "BigReal":
        """Correctly rounded square root; rejects negative values."""
        if self._value < 0:
            raise ValueError(f"sqrt of negative value {self._value}")
        with gmpy2.context(precision=self._precision_bits):
            return BigReal._wrap(gmpy2.sqrt(self._value), self._precision_bits)

    def arctan(self) -> "BigReal":
        """Correctly rounded arctangent."""
        with gmpy2.context(precision=self._precision_bits):
            return BigReal._wrap(gmpy2.atan(self._value), self._precision_bits)

    def scale_2exp(self, k: int) -> "BigReal":
        """Multiply by 2**k exactly (no rounding, precision unchanged)."""
        with gmpy2.context(precision=self._precision_bits):
            if k >= 0:
                v = gmpy2.mul_2exp(self._value, k)
            else:
                v = gmpy2.div_2exp(self._value, -k)
            return BigReal._wrap(v, self._precision_bits)

    # -- comparisons (exact on the stored values) ----------------------------

    def _cmp_value(self, other):
        if isinstance(other, BigReal):
            return other._value
        if isinstance(other, (int, float)):
            return other
        return None

    def __eq__(self, other):
        ov = self._cmp_value(other)
        return NotImplemented if ov is None else self._value == ov

    def __lt__(self, other):
        ov = self._cmp_value(other)
        return NotImplemented if ov is None else self._value < ov

    def __le__(self, other):
        ov = self._cmp_value(other)
        return NotImplemented if ov is None else self._value <= ov

    def __gt__(self, other):
        ov = self._cmp_value(other)
        return NotImplemented if ov is None else self._value > ov

    def __ge__(self, other):
        ov = self._cmp_value(other)
        return NotImplemented if ov is None else self._value >= ov

    def __hash__(self):
        return hash(self._value)

    def __bool__(self):
        return self._value != 0

    def __float__(self):
        return float(self._value)

    def to_decimal(self, digits: int) -> str:
        """Fixed-point decimal string with ``digits`` digits after the point,
        rounded to nearest."""
        return format(self._value, f".{digits}f")

    def to_decimal_truncated(self, digits: int) -> str:
        """Fixed-point decimal string truncated (not rounded) after ``digits``
        digits, matching a trailing-ellipsis display."""
        bits = self._precision_bits + 4 * digits + 16
        with gmpy2.context(precision=bits):
            scaled = self._value * mpfr(10) ** digits
            n = int(gmpy2.floor(abs(scaled)))
        sign = "-" if self._value < 0 else ""
        if digits == 0:
            return f"{sign}{n}"
        return f"{sign}{n // 10**digits}.{n % 10**digits:0{digits}d}"

    def __repr__(self):
        return f"BigReal({str(self._value)!r}, precision_bits={self._precision_bits})"

    def __str__(self):
        return str(self._value)


@dataclass(frozen=True)
class PiRational:
    """A dyadic angle num / 2**den_exp in units of pi, strictly inside (0, pi).

    Canonical form: ``num`` odd, ``den_exp >= 1``, ``0 < num < 2**den_exp``.
    Even numerators are reduced on construction; anything that cannot be
    brought to canonical form is rejected.
    """

    num: int
    den_exp: int

    def __post_init__(self):
        num, e = self.num, self.den_exp
        if num < 1 or e < 1:
            raise ValueError(f"invalid dyadic angle {num}/2^{e}")
        while num % 2 == 0 and e > 0:
            num //= 2
            e -= 1
        if e < 1 or num >= (1 << e):
            raise ValueError(f"angle {self.num}/2^{self.den_exp} * pi not inside (0, pi)")
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den_exp", e)

    def half(self) -> "PiRational":
        """The half angle num / 2**(den_exp+1)."""
        return PiRational(self.num, self.den_exp + 1)

    def complement(self) -> "PiRational":
        """The angle pi minus this one: (2**den_exp - num) / 2**den_exp."""
        return PiRational((1 << self.den_exp) - self.num, self.den_exp)

    def __str__(self):
        return f"{self.num}/2^{self.den_exp}"


# -- pi oracle: Machin arctangent series in integer fixed point --------------

_pi_cache: dict[int, mpfr] = {}
_pi_lock = threading.Lock()


def _atan_recip_fixed(k: int, work_bits: int) -> int:
    """Truncated 2**work_bits * arctan(1/k) for integer k >= 2.

    Alternating series sum_{i>=0} (-1)^i / ((2i+1) k^(2i+1)); each floor
    division truncates at most one ulp, so the total error is below the
    term count in ulps of 2**-work_bits.
    """
    if k < 2:
        raise ValueError("arctan reciprocal series needs k >= 2")
    num = (1 << work_bits) // k
    ksq = k * k
    total = 0
    i = 0
    while num:
        term = num // (2 * i + 1)
        total = total - term if i & 1 else total + term
        num //= ksq
        i += 1
    return total


def arctan_recip(k: int, precision_bits: int) -> BigReal:
    """arctan(1/k) by the in-repo integer series, rounded once at the end."""
    require_precision(precision_bits)
    work = precision_bits + GUARD_BITS
    scaled = _atan_recip_fixed(k, work)
    with gmpy2.context(precision=precision_bits):
        return BigReal._wrap(gmpy2.div_2exp(mpfr(scaled), work), precision_bits)


def _pi_fixed(work_bits: int) -> int:
    # Machin: pi = 16 arctan(1/5) - 4 arctan(1/239)
    return 16 * _atan_recip_fixed(5, work_bits) - 4 * _atan_recip_fixed(239, work_bits)


def _pi_mpfr(precision_bits: int) -> mpfr:
    """pi as a raw mpfr at the given precision (memoized, lock-guarded)."""
    with _pi_lock:
        hit = _pi_cache.get(precision_bits)
    if hit is not None:
        return hit
    work = precision_bits + GUARD_BITS
    scaled = _pi_fixed(work)
    with gmpy2.context(precision=precision_bits):
        value = gmpy2.div_2exp(mpfr(scaled), work)
    with _pi_lock:
        _pi_cache[precision_bits] = value
    return value


def reference_pi(precision_bits: int) -> BigReal:
    """pi with absolute error below 2**(1-precision_bits).

    Deterministic for a fixed precision; the memo table is guarded for
    concurrent access.
    """
    require_precision(precision_bits)
    return BigReal._wrap(_pi_mpfr(precision_bits), precision_bits)


# -- sin/cos of dyadic multiples of pi ---------------------------------------


def _dyadic_pi_angle(q: PiRational, work_bits: int) -> mpfr:
    # q * pi at the current working precision: one rounded multiply by the
    # integer numerator, then an exact power-of-two division
    return gmpy2.div_2exp(_pi_mpfr(work_bits) * q.num, q.den_exp)


def _sin_series(x: mpfr, work_bits: int) -> mpfr:
    x_sq = x * x
    term = x
    total = x
    eps = gmpy2.div_2exp(mpfr(1), work_bits + 8)
    i = 1
    while abs(term) > eps:
        term = -term * x_sq / ((2 * i) * (2 * i + 1))
        total += term
        i += 1
    return total


def _cos_series(x: mpfr, work_bits: int) -> mpfr:
    x_sq = x * x
    term = mpfr(1)
    total = mpfr(1)
    eps = gmpy2.div_2exp(mpfr(1), work_bits + 8)
    i = 1
    while abs(term) > eps:
        term = -term * x_sq / ((2 * i - 1) * (2 * i))
        total += term
        i += 1
    return total


def sin_pi(q: PiRational, precision_bits: int) -> BigReal:
    """sin(q * pi) via argument reduction against reference_pi plus a Taylor
    series; absolute error below 2**(1-precision_bits) (faithful rounding).
    Result in (0, 1], exact at q = 1/2."""
    require_precision(precision_bits)
    if q.num == 1 and q.den_exp == 1:
        return BigReal(1, precision_bits)
    work = precision_bits + GUARD_BITS
    reduced = q.complement() if (q.num << 1) > (1 << q.den_exp) else q
    with gmpy2.context(precision=work):
        s = _sin_series(_dyadic_pi_angle(reduced, work), work)
    with gmpy2.context(precision=precision_bits):
        return BigReal._wrap(mpfr(s), precision_bits)


def cos_pi(q: PiRational, precision_bits: int) -> BigReal:
    """cos(q * pi), same contract as sin_pi; result in (-1, 1), exact 0 at
    q = 1/2."""
    require_precision(precision_bits)
    if q.num == 1 and q.den_exp == 1:
        return BigReal(0, precision_bits)
    work = precision_bits + GUARD_BITS
    negate = (q.num << 1) > (1 << q.den_exp)
    reduced = q.complement() if negate else q
    with gmpy2.context(precision=work):
        c = _cos_series(_dyadic_pi_angle(reduced, work), work)
        if negate:
            c = -c
    with gmpy2.context(precision=precision_bits):
        return BigReal._wrap(mpfr(c), precision_bits)
