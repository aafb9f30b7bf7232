"""Binary-reflected Gray code: generation, ranking, and the sign-word map.

Conventions used package-wide (stated once, here): indexing is 1-based, so
``word_at(m, j)`` with j in [1, 2**m] matches ``generate(m)[j-1]``; the
leftmost bit of a word is the OUTERMOST radical sign (bit 0 = plus,
bit 1 = minus, sign +1 = bit 0).
"""

from __future__ import annotations

from typing import Iterable, Iterator

MAX_ORDER = 62

__all__ = [
    "MAX_ORDER",
    "GrayWord",
    "SignSequence",
    "generate",
    "word_at",
    "rank",
    "moreno_index",
    "word_from_signs",
    "signs_from_word",
]


class GrayWord:
    """An immutable bit word; serializes as a plain 0/1 string.

    Length 0 is legal (it indexes the bare sqrt(2) radical); the code
    generation functions themselves only produce words of order >= 1.
    """

    __slots__ = ("_bits",)

    def __init__(self, bits: "str | Iterable[int]" = ""):
        if not isinstance(bits, str):
            bits = "".join(str(int(b)) for b in bits)
        if bits.strip("01"):
            raise ValueError(f"malformed word {bits!r}: bits must be 0 or 1")
        self._bits = bits

    @property
    def bits(self) -> str:
        return self._bits

    def __len__(self) -> int:
        return len(self._bits)

    def __iter__(self) -> Iterator[int]:
        return (int(b) for b in self._bits)

    def __getitem__(self, i) -> int:
        return int(self._bits[i])

    def __eq__(self, other):
        if isinstance(other, GrayWord):
            return self._bits == other._bits
        return NotImplemented

    def __hash__(self):
        return hash(self._bits)

    def __str__(self):
        return self._bits

    def __repr__(self):
        return f"GrayWord({self._bits!r})"

    def __add__(self, other: "GrayWord") -> "GrayWord":
        if isinstance(other, GrayWord):
            return GrayWord(self._bits + other._bits)
        return NotImplemented


class SignSequence:
    """An immutable sequence over {+1, -1}, listed outermost sign first."""

    __slots__ = ("_signs",)

    def __init__(self, signs: Iterable[int]):
        signs = tuple(int(s) for s in signs)
        if any(s not in (1, -1) for s in signs):
            raise ValueError("signs must be +1 or -1")
        self._signs = signs

    @property
    def signs(self) -> tuple[int, ...]:
        return self._signs

    def __len__(self) -> int:
        return len(self._signs)

    def __iter__(self) -> Iterator[int]:
        return iter(self._signs)

    def __getitem__(self, i) -> int:
        return self._signs[i]

    def __eq__(self, other):
        if isinstance(other, SignSequence):
            return self._signs == other._signs
        return NotImplemented

    def __hash__(self):
        return hash(self._signs)

    def __repr__(self):
        return f"SignSequence({self._signs!r})"


def _check_order(order: int) -> None:
    if not 1 <= order <= MAX_ORDER:
        raise ValueError(f"order must be in [1, {MAX_ORDER}], got {order}")


def generate(order: int) -> list[GrayWord]:
    """All 2**order words by the reflected construction: prefix the previous
    code with 0, then its reversal with 1."""
    _check_order(order)
    code = [""]
    for _ in range(order):
        code = ["0" + w for w in code] + ["1" + w for w in reversed(code)]
    return [GrayWord(w) for w in code]


def word_at(order: int, j: int) -> GrayWord:
    """The rank-j word (1-based) without materializing the full code.

    Closed form: binary of j-1 XOR its half; verified against generate()
    in the test suite.
    """
    _check_order(order)
    if not 1 <= j <= (1 << order):
        raise ValueError(f"rank must be in [1, {1 << order}], got {j}")
    g = (j - 1) ^ ((j - 1) >> 1)
    return GrayWord(format(g, f"0{order}b"))


def rank(word: GrayWord) -> int:
    """1-based position of a word in the reflected code of its own length.

    Inverse of word_at; the empty word ranks 1 in the trivial order-0 code.
    """
    g = int(word.bits, 2) if len(word) else 0
    n = g
    mask = g >> 1
    while mask:
        n ^= mask
        mask >>= 1
    return n + 1


def moreno_index(signs: SignSequence) -> int:
    """Continued-root ordering index of a sign sequence.

    For k signs (b_k, ..., b_1) listed outermost first, the index is
    (2**k - sum_{j=1..k} 2**(k-j) * b_k*...*b_{k-j+1} + 1) / 2.  Under the
    +1 -> 0 / -1 -> 1 bit map this equals rank(word_from_signs(signs));
    the two are computed independently and cross-checked in tests.
    """
    k = len(signs)
    if k < 1:
        raise ValueError("sign sequence must be non-empty")
    total = 0
    prod = 1
    for idx, s in enumerate(signs):
        prod *= s
        total += prod << (k - 1 - idx)
    return ((1 << k) - total + 1) // 2


def word_from_signs(signs: SignSequence) -> GrayWord:
    """Elementwise +1 -> 0, -1 -> 1."""
    return GrayWord("".join("0" if s == 1 else "1" for s in signs))


def signs_from_word(word: GrayWord) -> SignSequence:
    """Elementwise 0 -> +1, 1 -> -1; inverse of word_from_signs."""
    return SignSequence(1 if b == 0 else -1 for b in word)
