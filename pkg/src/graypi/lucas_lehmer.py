"""The quadratic iteration map, its generalization, and Chebyshev cross-checks.

L_n is the n-fold iterate of t -> t*t - 2 (L_0 = identity); its degree is
2**n, so polynomials are never expanded to coefficients: everything is
evaluated by the defining iteration.  The generalized map M_n^a iterates
t -> 2a*t*t - 1/a and reduces to L_n at a = 1/2.

Positive zeros are produced from their exact angles through the cosine
oracle (value = 2*cos((2j-1)/2**(n+1) * pi) at Gray rank j), not by root
finding; the radical-evaluation route is cross-checked in tests.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

import gmpy2
from gmpy2 import mpfr

from .graycode import GrayWord, word_at
from .numerics import (
    GUARD_BITS,
    BigReal,
    PiRational,
    cos_pi,
    require_precision,
)

DEFAULT_SEED = 42
MAX_ZERO_DEPTH = 24
MAX_SUITE_DEPTH = 14

__all__ = [
    "DEFAULT_SEED",
    "MAX_ZERO_DEPTH",
    "MAX_SUITE_DEPTH",
    "ZeroDescriptor",
    "InterleavingReport",
    "IdentityReport",
    "eval_L",
    "eval_M",
    "cheb_T",
    "cheb_U",
    "positive_zeros",
    "m_zeros",
    "check_interleaving",
    "identity_suite",
    "arctan_form_check",
    "maclaurin_defect",
]


def _to_mpfr(x) -> mpfr:
    # exact under a wide enough context; BigReal, int, float and mpfr accepted
    return mpfr(x.value if isinstance(x, BigReal) else x)


def _precision_of(x, fallback: int) -> int:
    return x.precision_bits if isinstance(x, BigReal) else fallback


def _iterate_L(t: mpfr, n: int) -> mpfr:
    for _ in range(n):
        t = t * t - 2
    return t


def eval_L(n: int, x, precision_bits: int) -> BigReal:
    """n-fold iterate of t -> t*t - 2 applied to x; guard bits n+32."""
    if n < 0:
        raise ValueError(f"depth must be >= 0, got {n}")
    require_precision(precision_bits)
    with gmpy2.context(precision=precision_bits + n + GUARD_BITS):
        v = _iterate_L(_to_mpfr(x), n)
    with gmpy2.context(precision=precision_bits):
        return BigReal._wrap(mpfr(v), precision_bits)


def eval_M(n: int, a, x, precision_bits: int) -> BigReal:
    """n-fold iterate of t -> 2a*t*t - 1/a applied to x; a must be positive."""
    if n < 0:
        raise ValueError(f"depth must be >= 0, got {n}")
    require_precision(precision_bits)
    with gmpy2.context(precision=precision_bits + n + GUARD_BITS):
        av = _to_mpfr(a)
        if av <= 0:
            raise ValueError(f"map parameter must be positive, got {av}")
        two_a = 2 * av
        inv_a = 1 / av
        t = _to_mpfr(x)
        for _ in range(n):
            t = two_a * t * t - inv_a
    with gmpy2.context(precision=precision_bits):
        return BigReal._wrap(mpfr(t), precision_bits)


def _cheb_T_mpfr(k: int, x: mpfr) -> mpfr:
    if k == 0:
        return mpfr(1)
    t_prev, t_cur = mpfr(1), x
    two_x = 2 * x
    for _ in range(k - 1):
        t_prev, t_cur = t_cur, two_x * t_cur - t_prev
    return t_cur


def _cheb_U_mpfr(k: int, x: mpfr) -> mpfr:
    if k == 0:
        return mpfr(1)
    two_x = 2 * x
    u_prev, u_cur = mpfr(1), two_x
    for _ in range(k - 1):
        u_prev, u_cur = u_cur, two_x * u_cur - u_prev
    return u_cur


def cheb_T(k: int, x: BigReal) -> BigReal:
    """First-kind Chebyshev value by the three-term recurrence."""
    if k < 0:
        raise ValueError(f"index must be >= 0, got {k}")
    bits = x.precision_bits
    with gmpy2.context(precision=bits + k.bit_length() + GUARD_BITS):
        v = _cheb_T_mpfr(k, _to_mpfr(x))
    with gmpy2.context(precision=bits):
        return BigReal._wrap(mpfr(v), bits)


def cheb_U(k: int, x: BigReal) -> BigReal:
    """Second-kind Chebyshev value; the recurrence honors the endpoint
    values U_k(+-1) = (+-1)^k (k+1) exactly."""
    if k < 0:
        raise ValueError(f"index must be >= 0, got {k}")
    bits = x.precision_bits
    with gmpy2.context(precision=bits + k.bit_length() + GUARD_BITS):
        v = _cheb_U_mpfr(k, _to_mpfr(x))
    with gmpy2.context(precision=bits):
        return BigReal._wrap(mpfr(v), bits)


@dataclass(frozen=True)
class ZeroDescriptor:
    """One positive zero of L_n (or of M_n^a when scaled): Gray rank j,
    indexing word of length n-1, exact angle, and numeric value."""

    n: int
    j: int
    word: GrayWord
    angle: PiRational
    value: BigReal


def positive_zeros(n: int, precision_bits: int) -> list[ZeroDescriptor]:
    """The 2**(n-1) positive zeros in Gray order (strictly decreasing values).

    Values carry precision_bits + 2n bits: the derivative of the iteration
    near a zero grows like 4**n, so keeping the extra bits is what makes
    |eval_L(n, value)| < 2**(24 - precision_bits) checkable at every
    supported depth.
    """
    if not 2 <= n <= MAX_ZERO_DEPTH:
        raise ValueError(f"depth must be in [2, {MAX_ZERO_DEPTH}], got {n}")
    require_precision(precision_bits)
    value_bits = precision_bits + 2 * n
    zeros = []
    for j in range(1, (1 << (n - 1)) + 1):
        angle = PiRational(2 * j - 1, n + 1)
        value = cos_pi(angle, value_bits).scale_2exp(1)
        zeros.append(ZeroDescriptor(n, j, word_at(n - 1, j), angle, value))
    return zeros


def m_zeros(n: int, a, precision_bits: int) -> list[ZeroDescriptor]:
    """Positive zeros of the generalized map: those of L_n scaled by 1/(2a).

    Gray order (the j-sequence) is identical for every a > 0.
    """
    require_precision(precision_bits)
    value_bits = precision_bits + 2 * n
    with gmpy2.context(precision=value_bits):
        av = _to_mpfr(a)
        if av <= 0:
            raise ValueError(f"map parameter must be positive, got {av}")
        scale = BigReal._wrap(1 / (2 * av), value_bits)
    return [
        ZeroDescriptor(z.n, z.j, z.word, z.angle, z.value * scale)
        for z in positive_zeros(n, precision_bits)
    ]


@dataclass(frozen=True)
class InterleavingReport:
    """Placement of the zeros of L_{n+1} relative to those of L_n.

    Clauses checked (all exact consequences of the angle formulas):

    i)   the smallest zero of L_{n+1} lies left of the smallest zero of L_n;
    ii)  one-per-gap interleaving: the k-th zero of L_n (Gray order) lies
         strictly between the Gray-consecutive zeros 2k and 2k-1 of
         L_{n+1}, and each of the 2**(n-1) - 1 gaps between consecutive
         zeros of L_n holds exactly two zeros of L_{n+1};
    iii) the leading-0 zeros of L_{n+1} all exceed every leading-1 zero and
         the smallest zero of L_n, and the largest of them exceeds the
         largest zero of L_n.
    """

    n: int
    gap_count: int
    clause_i: bool
    clause_ii: bool
    clause_iii: bool
    violations: tuple[str, ...]

    @property
    def passed(self) -> bool:
        return self.clause_i and self.clause_ii and self.clause_iii


def check_interleaving(n: int, precision_bits: int) -> InterleavingReport:
    """Verify the zero-placement clauses for the pair (L_n, L_{n+1})."""
    if not 2 <= n <= 16:
        raise ValueError(f"depth must be in [2, 16], got {n}")
    base = [z.value for z in positive_zeros(n, precision_bits)]
    refined = positive_zeros(n + 1, precision_bits)
    fine = [z.value for z in refined]
    violations: list[str] = []

    clause_i = fine[-1] < base[-1]
    if not clause_i:
        violations.append(f"i: smallest zero did not move left at n={n}")

    clause_ii = True
    for k in range(1, len(base) + 1):
        if not fine[2 * k - 1] < base[k - 1] < fine[2 * k - 2]:
            clause_ii = False
            violations.append(f"ii: zero j={k} of depth {n} escaped its bracket")
    for k in range(1, len(base)):
        lo, hi = base[k], base[k - 1]
        inside = sum(1 for v in fine if lo < v < hi)
        if inside != 2:
            clause_ii = False
            violations.append(f"ii: gap j={k} holds {inside} zeros, expected 2")

    lead0 = [z.value for z in refined if z.word[0] == 0]
    lead1 = [z.value for z in refined if z.word[0] == 1]
    clause_iii = (
        fine[0] > base[0]
        and min(lead0) > max(lead1)
        and min(lead0) > base[-1]
    )
    if not clause_iii:
        violations.append(f"iii: leading-bit separation failed at n={n}")

    return InterleavingReport(
        n=n,
        gap_count=len(base) - 1,
        clause_i=clause_i,
        clause_ii=clause_ii,
        clause_iii=clause_iii,
        violations=tuple(violations),
    )


@dataclass(frozen=True)
class IdentityReport:
    """Max residuals of the four two-sided identity checks over a sample set."""

    n: int
    samples: int
    precision_bits: int
    max_residuals: dict[str, BigReal]

    @property
    def tolerance(self) -> BigReal:
        return BigReal(1, self.precision_bits).scale_2exp(32 - self.precision_bits)

    @property
    def passed(self) -> bool:
        tol = self.tolerance
        return all(r < tol for r in self.max_residuals.values())


# exclusion half-width around sqrt(2), 0 and +-2 for identity sampling
_SAMPLE_MARGIN = 2.0**-16


def identity_suite(
    n: int,
    samples: int,
    precision_bits: int,
    seed: int = DEFAULT_SEED,
) -> IdentityReport:
    """Two-sided residuals of the four structural identities at random points.

    For x in (-2, 2) away from 0, +-sqrt(2) and +-2, with u = x*x/2 - 1 and
    theta = arccos(x/2), checks

      chebyshev_bridge:    L_n(x)                 vs  2 * T_{2^(n-1)}(u)
      cosine_doubling:     L_n(x)                 vs  2 * cos(2^n * theta)
      product_second_kind: L_1(x) * ... * L_n(x)  vs  U_{2^n - 1}(u)
      product_sine_ratio:  L_1(x) * ... * L_n(x)  vs  sin(2^(n+1) theta) / sin(2 theta)

    The left sides run the quadratic iteration; the right sides run the
    Chebyshev three-term recurrences and MPFR trigonometry, so the routes
    are independent.  Residuals stay below 2**(32 - precision_bits).
    """
    if not 1 <= n <= MAX_SUITE_DEPTH:
        raise ValueError(f"depth must be in [1, {MAX_SUITE_DEPTH}], got {n}")
    if samples < 1:
        raise ValueError("need at least one sample")
    require_precision(precision_bits)

    rng = random.Random(seed)
    work = precision_bits + n + 48
    t_index = 1 << (n - 1)
    u_index = (1 << n) - 1
    worst = {
        "chebyshev_bridge": mpfr(0),
        "cosine_doubling": mpfr(0),
        "product_second_kind": mpfr(0),
        "product_sine_ratio": mpfr(0),
    }

    with gmpy2.context(precision=work):
        sqrt2 = gmpy2.sqrt(mpfr(2))
        for _ in range(samples):
            while True:
                x = mpfr(rng.uniform(-2.0, 2.0))
                ax = abs(x)
                if (
                    ax > _SAMPLE_MARGIN
                    and 2 - ax > _SAMPLE_MARGIN
                    and abs(ax - sqrt2) > _SAMPLE_MARGIN
                ):
                    break

            u = x * x / 2 - 1
            ell = x
            product = mpfr(1)
            for _ in range(n):
                ell = ell * ell - 2
                product *= ell

            theta = gmpy2.acos(x / 2)
            r_bridge = abs(ell - 2 * _cheb_T_mpfr(t_index, u))
            r_cos = abs(ell - 2 * gmpy2.cos(gmpy2.mul_2exp(theta, n)))
            r_second = abs(product - _cheb_U_mpfr(u_index, u))
            r_sine = abs(
                product - gmpy2.sin(gmpy2.mul_2exp(theta, n + 1)) / gmpy2.sin(2 * theta)
            )
            worst["chebyshev_bridge"] = max(worst["chebyshev_bridge"], r_bridge)
            worst["cosine_doubling"] = max(worst["cosine_doubling"], r_cos)
            worst["product_second_kind"] = max(worst["product_second_kind"], r_second)
            worst["product_sine_ratio"] = max(worst["product_sine_ratio"], r_sine)

    with gmpy2.context(precision=precision_bits):
        rounded = {k: BigReal._wrap(mpfr(v), precision_bits) for k, v in worst.items()}
    return IdentityReport(
        n=n, samples=samples, precision_bits=precision_bits, max_residuals=rounded
    )


def arctan_form_check(n: int, x, precision_bits: int) -> BigReal:
    """Residual of the arctangent closed form against the plain iteration.

    Compares L_n(x) with 2*cos(2**(n-1) * arctan(sqrt(1-u*u)/u)), u = x*x/2-1.
    Below sqrt(2) the arctangent picks up a branch offset of 2**(n-1)*pi (an
    outright sign flip at n = 1), so the domain is kept to n >= 3 or
    |x| > sqrt(2) rather than being silently wrong on part of the plane.
    """
    if n < 1:
        raise ValueError(f"depth must be >= 1, got {n}")
    require_precision(precision_bits)
    work = precision_bits + n + GUARD_BITS
    with gmpy2.context(precision=work):
        xv = _to_mpfr(x)
        if not -2 < xv < 2:
            raise ValueError(f"x must be inside (-2, 2), got {xv}")
        half_sq = xv * xv / 2
        if n < 3 and half_sq <= 1:
            raise ValueError(
                f"closed form needs n >= 3 or |x| > sqrt(2); got n={n}, x={xv}"
            )
        u = half_sq - 1
        if u == 0:
            raise ValueError("x*x/2 - 1 vanished; x is too close to sqrt(2)")
        ratio = gmpy2.sqrt((2 - half_sq) * half_sq) / u
        rhs = 2 * gmpy2.cos(gmpy2.mul_2exp(gmpy2.atan(ratio), n - 1))
        residual = abs(_iterate_L(xv, n) - rhs)
    with gmpy2.context(precision=precision_bits):
        return BigReal._wrap(mpfr(residual), precision_bits)


def maclaurin_defect(n: int, a, x) -> BigReal:
    """|M_n^a(x) - (1/a - a * 2**(2n-1) * x*x)| / (x*x).

    The quotient tends to 0 as x -> 0 (the quadratic term is the exact
    second-order expansion about the origin); callers drive x along a
    dyadic sequence and assert monotone decrease.
    """
    if n < 2:
        raise ValueError(f"depth must be >= 2, got {n}")
    bits = _precision_of(x, 64)
    probe = mpfr(x.value if isinstance(x, BigReal) else x, 64)
    if probe == 0:
        raise ValueError("x must be nonzero")
    shrink = max(0, 1 - gmpy2.get_exp(probe))
    work = bits + 4 * n + 4 * shrink + GUARD_BITS
    with gmpy2.context(precision=work):
        av = _to_mpfr(a)
        if av <= 0:
            raise ValueError(f"map parameter must be positive, got {av}")
        xv = _to_mpfr(x)
        two_a = 2 * av
        inv_a = 1 / av
        t = xv
        for _ in range(n):
            t = two_a * t * t - inv_a
        x_sq = xv * xv
        quadratic = inv_a - gmpy2.mul_2exp(av, 2 * n - 1) * x_sq
        ratio = abs(t - quadratic) / x_sq
    with gmpy2.context(precision=bits):
        return BigReal._wrap(mpfr(ratio), bits)
