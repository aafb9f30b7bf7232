"""Convergent and exact formulas for pi and the golden ratio.

The classic sequence 2**(n+1) * sqrt(2 - sqrt(2 + ... + sqrt(2))) is the
word family 1 0^(n-1); the Gray-indexed generalization divides the depth-n
word 1 0...0 g_{m,h+1} by 2h+1.  Both converge to pi from below with error
about pi**3 (2h+1)**2 / (6 * 4**(n+2)).

The exact identities recover pi (and the golden ratio) from a single
evaluated radical through an arctangent, with no limiting process; they are
implemented end to end over three independent code paths (Gray ranking,
radical evaluation, MPFR arctangent) so a residual of zero is meaningful.
"""

from __future__ import annotations

from dataclasses import dataclass

import gmpy2
from gmpy2 import mpfr

from .graycode import GrayWord, word_at
from .numerics import GUARD_BITS, BigReal, _pi_mpfr, require_precision
from .radicals import _evaluate_mpfr, compose_word

__all__ = [
    "ApproxRecord",
    "classic_word",
    "classic_term",
    "gray_term",
    "error_sequence",
    "exact_pi",
    "phi_asymptotic",
    "phi_exact",
    "golden_ratio",
    "convergence_table",
]


@dataclass(frozen=True)
class ApproxRecord:
    """One convergence-table row: the word used, its scaled value, and the
    absolute error against reference_pi at the record's precision."""

    n: int
    m: int | None
    h: int | None
    word: GrayWord
    approximant: BigReal
    abs_error: BigReal

    def digits_correct(self) -> int:
        """floor(-log10(abs_error / pi)), capped at the record's precision."""
        cap = int(self.approximant.precision_bits * 0.30102999566398)
        if self.abs_error == 0:
            return cap
        with gmpy2.context(precision=64):
            ratio = self.abs_error.value / _pi_mpfr(64)
            return min(cap, int(gmpy2.floor(-gmpy2.log10(ratio))))


def classic_word(depth: int) -> GrayWord:
    """The word whose value is 2*sin(pi / 2**(depth+2)): empty at depth 0,
    otherwise 1 followed by depth-1 zeros."""
    if depth < 0:
        raise ValueError(f"depth must be >= 0, got {depth}")
    return GrayWord("" if depth == 0 else "1" + "0" * (depth - 1))


def _record(n, m, h, word, scale_num, scale_den, precision_bits) -> ApproxRecord:
    # 2 guard bits per nesting level, as in radicals.evaluate
    work = precision_bits + 2 * len(word) + GUARD_BITS
    with gmpy2.context(precision=work):
        approx = gmpy2.mul_2exp(_evaluate_mpfr(word, work), scale_num)
        if scale_den != 1:
            approx = approx / scale_den
        err = abs(approx - _pi_mpfr(work))
    with gmpy2.context(precision=precision_bits):
        return ApproxRecord(
            n=n,
            m=m,
            h=h,
            word=word,
            approximant=BigReal._wrap(mpfr(approx), precision_bits),
            abs_error=BigReal._wrap(mpfr(err), precision_bits),
        )


def classic_term(n: int, precision_bits: int) -> ApproxRecord:
    """2**(n+1) * evaluate(1 0^(n-1)); equals 2**(n+2) * sin(pi/2**(n+2))."""
    if n < 1:
        raise ValueError(f"depth must be >= 1, got {n}")
    require_precision(precision_bits)
    return _record(n, None, None, classic_word(n), n + 1, 1, precision_bits)


def gray_term(m: int, h: int, n: int, precision_bits: int) -> ApproxRecord:
    """(2**(n+1) / (2h+1)) * evaluate(1 0^(n-m-1) g_{m,h+1})."""
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    if not 0 <= h <= (1 << m) - 1:
        raise ValueError(f"h must be in [0, 2^m - 1], got {h}")
    if n <= m + 1:
        raise ValueError(f"need n > m+1, got n={n}, m={m}")
    require_precision(precision_bits)
    word = compose_word(True, n - m - 1, word_at(m, h + 1))
    return _record(n, m, h, word, n + 1, 2 * h + 1, precision_bits)


def error_sequence(n: int, precision_bits: int) -> BigReal:
    """e(n) = pi / 2**(n+1) - evaluate(1 0^(n-1)); positive, decreasing,
    infinitesimal."""
    if n < 1:
        raise ValueError(f"depth must be >= 1, got {n}")
    require_precision(precision_bits)
    # the difference is ~ 2**(-3n) while the radical costs ~n bits of
    # absolute error, so 4n extra bits keep the result accurate to its own
    # full precision
    work = precision_bits + 4 * n + GUARD_BITS
    with gmpy2.context(precision=work):
        e = gmpy2.div_2exp(_pi_mpfr(work), n + 1) - _evaluate_mpfr(classic_word(n), work)
    with gmpy2.context(precision=precision_bits):
        return BigReal._wrap(mpfr(e), precision_bits)


def _zero_word_arctan(n: int, h: int, work: int) -> mpfr:
    """arctan sqrt(1/(omega/2 - 1)**2 - 1) for the rank 2**(n-1) - h zero
    word, with omega from radical evaluation.  Equals (2h+1) pi / 2**n."""
    word = word_at(n - 1, (1 << (n - 1)) - h)
    v = _evaluate_mpfr(word, work)
    half = gmpy2.div_2exp(v * v, 1)
    t = half - 1
    # 1 - t*t factored as (omega/2)(2 - omega/2): no cancellation near t = -1
    r = gmpy2.sqrt(half * (2 - half)) / abs(t)
    return gmpy2.atan(r)


def exact_pi(n: int, h: int, precision_bits: int) -> BigReal:
    """pi recovered exactly (not as a limit) from one evaluated radical:
    (2**n / (2h+1)) * arctan sqrt(1/(omega/2 - 1)**2 - 1).

    h is capped at 2**(n-2) - 1, where the arctangent branch stays
    principal; larger h is a domain error.
    """
    if n < 2:
        raise ValueError(f"depth must be >= 2, got {n}")
    h_max = (1 << (n - 2)) - 1
    if not 0 <= h <= h_max:
        raise ValueError(f"h must be in [0, {h_max}] at depth {n}, got {h}")
    require_precision(precision_bits)
    work = precision_bits + 2 * n + GUARD_BITS
    with gmpy2.context(precision=work):
        estimate = gmpy2.mul_2exp(_zero_word_arctan(n, h, work), n) / (2 * h + 1)
    with gmpy2.context(precision=precision_bits):
        return BigReal._wrap(mpfr(estimate), precision_bits)


def phi_exact(n: int, precision_bits: int) -> BigReal:
    """The golden ratio recovered exactly at every n >= 4:
    sqrt(2**(n-2) * arctan(...) / pi) + 1/2 with the h = 2 zero word."""
    if n < 4:
        raise ValueError(f"depth must be >= 4 (h = 2 needs 2**(n-2) > 2), got {n}")
    require_precision(precision_bits)
    work = precision_bits + 2 * n + GUARD_BITS
    with gmpy2.context(precision=work):
        scaled = gmpy2.mul_2exp(_zero_word_arctan(n, 2, work), n - 2)
        estimate = gmpy2.sqrt(scaled / _pi_mpfr(work)) + mpfr("0.5")
    with gmpy2.context(precision=precision_bits):
        return BigReal._wrap(mpfr(estimate), precision_bits)


def phi_asymptotic(n: int, precision_bits: int, printed_exponent: bool = False) -> BigReal:
    """Convergent golden-ratio sequence from the (m=2, h=2) word family:
    sqrt(2**(n-1) * evaluate(1 0^(n-3) 11) / pi) + 1/2 -> phi.

    printed_exponent=True uses 2**(n-2) instead (the uncorrected exponent,
    which converges to 1/2 + sqrt(5/8) instead of phi); it is exposed so the
    two variants can be printed side by side.
    """
    if n < 4:
        raise ValueError(f"depth must be >= 4, got {n}")
    require_precision(precision_bits)
    word = compose_word(True, n - 3, word_at(2, 3))
    work = precision_bits + 2 * n + GUARD_BITS
    shift = n - 2 if printed_exponent else n - 1
    with gmpy2.context(precision=work):
        scaled = gmpy2.mul_2exp(_evaluate_mpfr(word, work), shift)
        estimate = gmpy2.sqrt(scaled / _pi_mpfr(work)) + mpfr("0.5")
    with gmpy2.context(precision=precision_bits):
        return BigReal._wrap(mpfr(estimate), precision_bits)


def golden_ratio(precision_bits: int) -> BigReal:
    """(1 + sqrt(5)) / 2 from the square-root oracle, never from the
    formulas under test."""
    require_precision(precision_bits)
    work = precision_bits + GUARD_BITS
    with gmpy2.context(precision=work):
        phi = (1 + gmpy2.sqrt(mpfr(5))) / 2
    with gmpy2.context(precision=precision_bits):
        return BigReal._wrap(mpfr(phi), precision_bits)


def convergence_table(
    method: str,
    n_range,
    precision_bits: int,
    m: int | None = None,
    h: int | None = None,
) -> list[ApproxRecord]:
    """One ApproxRecord per depth; abs_error is strictly decreasing down the
    table for both families."""
    if method == "classic":
        return [classic_term(n, precision_bits) for n in n_range]
    if method == "gray":
        if m is None or h is None:
            raise ValueError("gray method needs both m and h")
        return [gray_term(m, h, n, precision_bits) for n in n_range]
    raise ValueError(f"unknown method {method!r}")
