"""Nested square roots of 2 indexed by sign words.

A word w = b_1 b_2 ... b_l (leftmost = outermost sign) denotes

    omega(w) = 2 +/- sqrt(2 +/- sqrt(... +/- sqrt(2)))        (l signs, l+1 twos)

with bit 0 standing for plus and bit 1 for minus; evaluate() returns
sqrt(omega(w)).  The empty word is legal and denotes the bare sqrt(2).

Every such value has the closed form 2*cos((2j-1)/2**(l+2) * pi) where j is
the word's Gray rank; the map is validated against a brute-force sort oracle
in the test suite before anything else relies on it.

Cancellation guard: each "2 - sqrt(...)" step with an inner value near 2 can
lose about two bits per level, so evaluate() works internally at
precision_bits + 2*len(word) + 32 bits and rounds once at the end.
"""

from __future__ import annotations

from dataclasses import dataclass

import gmpy2
from gmpy2 import mpfr

from .graycode import GrayWord, rank, word_at
from .numerics import GUARD_BITS, BigReal, PiRational, cos_pi, require_precision

MAX_WORD_LENGTH = 10**6

__all__ = [
    "MAX_WORD_LENGTH",
    "RadicandError",
    "ClosedForm",
    "NestedRadical",
    "evaluate",
    "closed_form",
    "compose_word",
    "verify_three_term",
]


class RadicandError(ArithmeticError):
    """An intermediate radicand came out non-positive (internal invariant
    violation; cannot occur for valid words at adequate precision)."""

    def __init__(self, depth: int):
        self.depth = depth
        super().__init__(f"non-positive radicand after {depth} signs (innermost first)")


@dataclass(frozen=True)
class ClosedForm:
    """Trigonometric form of a nested radical: value = 2*cos(angle * pi)."""

    angle: PiRational

    def value(self, precision_bits: int) -> BigReal:
        return cos_pi(self.angle, precision_bits).scale_2exp(1)


@dataclass(frozen=True)
class NestedRadical:
    """A nested square root of 2, identified by its sign word."""

    word: GrayWord

    def evaluate(self, precision_bits: int) -> BigReal:
        return evaluate(self.word, precision_bits)

    def closed_form(self) -> ClosedForm:
        return closed_form(self.word)


def _evaluate_mpfr(word: GrayWord, work_bits: int) -> mpfr:
    """sqrt(omega(word)) at the current precision; caller owns the context."""
    w = mpfr(2)
    for depth, bit in enumerate(reversed(word.bits), start=1):
        root = gmpy2.sqrt(w)
        w = 2 - root if bit == "1" else 2 + root
        if w <= 0:
            raise RadicandError(depth)
    return gmpy2.sqrt(w)


def evaluate(word: GrayWord, precision_bits: int) -> BigReal:
    """sqrt(omega(word)), innermost-out, absolute error below
    2**(1-precision_bits)."""
    require_precision(precision_bits)
    if len(word) > MAX_WORD_LENGTH:
        raise ValueError(f"word length {len(word)} exceeds {MAX_WORD_LENGTH}")
    work = precision_bits + 2 * len(word) + GUARD_BITS
    with gmpy2.context(precision=work):
        v = _evaluate_mpfr(word, work)
    with gmpy2.context(precision=precision_bits):
        return BigReal._wrap(mpfr(v), precision_bits)


def closed_form(word: GrayWord) -> ClosedForm:
    """The exact angle of a word: numerator 2*rank-1 over 2**(len+2)."""
    return ClosedForm(PiRational(2 * rank(word) - 1, len(word) + 2))


def compose_word(prefix_one: bool, zeros: int, suffix: GrayWord) -> GrayWord:
    """Concatenate [1]? [0]*zeros [suffix]."""
    if zeros < 0:
        raise ValueError(f"zeros must be >= 0, got {zeros}")
    head = "1" if prefix_one else ""
    return GrayWord(head + "0" * zeros + suffix.bits)


def verify_three_term(n: int, m: int, h: int, precision_bits: int) -> BigReal:
    """Residual of the three-term product identity between neighbouring
    deep radicals.

    With V(w) = evaluate(w) and words of total length n built from the
    order-m code g, the identity is

        2 * V(1 0..0 g_{m,h+2}) = V(1 0..0 g_{m,h+1}) * V(0^(n-1))
                                 + V(0..0 g_{m,h+1})  * V(1 0^(n-2))

    (the third radical carries the all-plus prefix of the same suffix:
    angle addition pairs 2sin((2h+3)a) with 2sin((2h+1)a) and 2cos((2h+1)a)
    for a = pi/2**(n+2)).  All five radicals are computed by evaluate(),
    never by closed form, so the residual genuinely cross-checks the
    evaluation path; callers assert it below 2**(16-precision_bits).
    """
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    if n <= m + 1:
        raise ValueError(f"need n > m+1, got n={n}, m={m}")
    if not 0 <= h <= (1 << m) - 2:
        raise ValueError(f"h must be in [0, 2^m - 2], got h={h}")
    require_precision(precision_bits)

    zeros = n - m - 1
    lhs_word = compose_word(True, zeros, word_at(m, h + 2))
    sin_word = compose_word(True, zeros, word_at(m, h + 1))
    cos_word = compose_word(False, zeros + 1, word_at(m, h + 1))
    big_word = GrayWord("0" * (n - 1))
    small_word = GrayWord("1" + "0" * (n - 2))

    work = precision_bits + 2 * n + GUARD_BITS
    with gmpy2.context(precision=work):
        lhs = 2 * _evaluate_mpfr(lhs_word, work)
        rhs = (
            _evaluate_mpfr(sin_word, work) * _evaluate_mpfr(big_word, work)
            + _evaluate_mpfr(cos_word, work) * _evaluate_mpfr(small_word, work)
        )
        residual = abs(lhs - rhs)
    with gmpy2.context(precision=precision_bits):
        return BigReal._wrap(mpfr(residual), precision_bits)
