"""Command-line surface: evaluation, enumeration, verification, tables.

Exit codes are stable: 0 on full pass, 1 on a verification failure, 2 on a
usage or parameter-domain error.  Precision is given in decimal digits at
the CLI and converted to bits as ceil(digits * log2(10)) + 32.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import sys
from dataclasses import dataclass

import gmpy2
from gmpy2 import mpfr

from .graycode import GrayWord, SignSequence, generate, moreno_index, rank, word_at, word_from_signs
from .lucas_lehmer import (
    DEFAULT_SEED,
    check_interleaving,
    identity_suite,
    m_zeros,
    positive_zeros,
)
from .numerics import BigReal, reference_pi
from .pi_formulas import (
    convergence_table,
    exact_pi,
    golden_ratio,
    phi_asymptotic,
    phi_exact,
)
from .radicals import closed_form, evaluate, verify_three_term

MIN_DIGITS = 20
MAX_DIGITS = 100_000

SUITES = ("identities", "ordering", "interleaving", "exact-pi", "golden", "appendix", "all")


def digits_to_bits(digits: int) -> int:
    return math.ceil(digits * math.log2(10)) + 32


@dataclass(frozen=True)
class RunConfig:
    digits: int = 50
    output_format: str = "text"
    seed: int = DEFAULT_SEED

    def __post_init__(self):
        if not MIN_DIGITS <= self.digits <= MAX_DIGITS:
            raise ValueError(
                f"digits must be in [{MIN_DIGITS}, {MAX_DIGITS}], got {self.digits}"
            )

    @property
    def bits(self) -> int:
        return digits_to_bits(self.digits)


@dataclass(frozen=True)
class CheckRow:
    suite: str
    name: str
    passed: bool
    worst: str = ""
    tolerance: str = ""
    detail: str = ""


def _sci(value) -> str:
    v = value.value if isinstance(value, BigReal) else value
    if v == 0:
        return "0"
    return format(v, ".3g")


def _tol10(cfg: RunConfig, slack: int) -> BigReal:
    # 10**-(digits - slack) at the working precision
    with gmpy2.context(precision=cfg.bits):
        return BigReal._wrap(mpfr(10) ** (slack - cfg.digits), cfg.bits)


def _emit_rows(rows: list[dict], columns: list[str], fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(rows, indent=2))
    elif fmt == "csv":
        writer = csv.DictWriter(sys.stdout, fieldnames=columns)
        writer.writeheader()
        writer.writerows(rows)
    else:
        widths = {c: max(len(c), *(len(str(r[c])) for r in rows)) if rows else len(c) for c in columns}
        print("  ".join(c.ljust(widths[c]) for c in columns))
        for r in rows:
            print("  ".join(str(r[c]).ljust(widths[c]) for c in columns))


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def cmd_radical(word_string: str, cfg: RunConfig) -> int:
    if word_string.strip("01"):
        raise ValueError(f"malformed word {word_string!r}: expected only 0/1 bits")
    word = GrayWord(word_string)
    value = evaluate(word, cfg.bits)
    form = closed_form(word)
    row = {
        "word": str(word),
        "length": len(word),
        "rank": rank(word),
        "angle_num": form.angle.num,
        "angle_den_exp": form.angle.den_exp,
        "value": value.to_decimal(cfg.digits),
    }
    if cfg.output_format == "text":
        print(f"word:   {row['word'] or '(empty)'}")
        print(f"length: {row['length']}")
        print(f"rank:   {row['rank']}")
        print(f"angle:  {form.angle} · pi")
        print(f"value:  {row['value']}")
    else:
        _emit_rows([row], list(row.keys()), cfg.output_format)
    return 0


def _table_rows(records, cfg: RunConfig) -> list[dict]:
    rows = []
    for r in records:
        rows.append(
            {
                "n": r.n,
                "m": "" if r.m is None else r.m,
                "h": "" if r.h is None else r.h,
                "word": str(r.word),
                "approximant": r.approximant.to_decimal(cfg.digits),
                "abs_error": _sci(r.abs_error),
                "digits_correct": r.digits_correct(),
            }
        )
    return rows


def cmd_pi(method: str, m: int | None, h: int | None, n_range: range, cfg: RunConfig) -> int:
    if method == "classic" and (m is not None or h is not None):
        raise ValueError("--m/--h only apply to the gray method")
    records = convergence_table(method, n_range, cfg.bits, m=m, h=h)
    _emit_rows(
        _table_rows(records, cfg),
        ["n", "m", "h", "word", "approximant", "abs_error", "digits_correct"],
        cfg.output_format,
    )
    return 0


def cmd_zeros(n: int, a: float | None, cfg: RunConfig) -> int:
    zeros = positive_zeros(n, cfg.bits) if a is None else m_zeros(n, a, cfg.bits)
    rows = [
        {
            "n": z.n,
            "j": z.j,
            "word": str(z.word),
            "angle_num": z.angle.num,
            "angle_den_exp": z.angle.den_exp,
            "value_decimal": z.value.to_decimal(cfg.digits),
        }
        for z in zeros
    ]
    _emit_rows(rows, ["n", "j", "word", "angle_num", "angle_den_exp", "value_decimal"], cfg.output_format)
    return 0


# ---------------------------------------------------------------------------
# verification suites
# ---------------------------------------------------------------------------


def _suite_ordering(cfg: RunConfig) -> list[CheckRow]:
    rows = []
    ordered = True
    detail = ""
    for length in range(1, 13):
        prev = None
        for j in range(1, (1 << length) + 1):
            v = evaluate(word_at(length, j), cfg.bits)
            if prev is not None and not v < prev:
                ordered = False
                detail = f"length={length} rank={j} word={word_at(length, j)}"
            prev = v
    rows.append(CheckRow("ordering", "gray order strictly decreasing (len <= 12)", ordered, detail=detail))

    consistent = True
    detail = ""
    for order in range(1, 13):
        code = generate(order)
        for j, word in enumerate(code, start=1):
            if word_at(order, j) != word or rank(word) != j:
                consistent = False
                detail = f"order={order} rank={j}"
        if any(
            sum(a != b for a, b in zip(code[i].bits, code[i + 1].bits)) != 1
            for i in range(len(code) - 1)
        ):
            consistent = False
            detail = f"adjacency broken at order={order}"
    rows.append(CheckRow("ordering", "word_at/rank/generate consistent (order <= 12)", consistent, detail=detail))

    moreno_ok = True
    detail = ""
    for k in range(1, 13):
        for j in range(1, (1 << k) + 1):
            word = word_at(k, j)
            signs = SignSequence(1 if b == 0 else -1 for b in word)
            if moreno_index(signs) != j or word_from_signs(signs) != word:
                moreno_ok = False
                detail = f"k={k} rank={j}"
    rows.append(CheckRow("ordering", "continued-root index equals gray rank (k <= 12)", moreno_ok, detail=detail))
    return rows


def _suite_interleaving(cfg: RunConfig) -> list[CheckRow]:
    rows = []
    for n in range(2, 13):
        report = check_interleaving(n, cfg.bits)
        rows.append(
            CheckRow(
                "interleaving",
                f"zero placement L_{n} vs L_{n + 1} ({report.gap_count} gaps)",
                report.passed,
                detail="; ".join(report.violations),
            )
        )
    return rows


def _suite_exact_pi(cfg: RunConfig) -> list[CheckRow]:
    tol = _tol10(cfg, 8)
    pi_ref = reference_pi(cfg.bits)
    worst = BigReal(0, cfg.bits)
    worst_at = "-"
    for n in range(2, 15):
        for h in range(0, 1 << (n - 2)):
            err = abs(exact_pi(n, h, cfg.bits) - pi_ref)
            if err > worst:
                worst, worst_at = err, f"(n={n}, h={h})"
    return [
        CheckRow(
            "exact-pi",
            "identity sweep n in [2,14], all h",
            worst < tol,
            worst=_sci(worst),
            tolerance=_sci(tol),
            detail=f"worst at {worst_at}",
        )
    ]


def _suite_golden(cfg: RunConfig) -> list[CheckRow]:
    rows = []
    tol = _tol10(cfg, 10)
    phi_ref = golden_ratio(cfg.bits)
    worst = BigReal(0, cfg.bits)
    worst_at = "-"
    for n in range(4, 17):
        err = abs(phi_exact(n, cfg.bits) - phi_ref)
        if err > worst:
            worst, worst_at = err, f"n={n}"
    rows.append(
        CheckRow(
            "golden",
            "exact golden-ratio identity n in [4,16]",
            worst < tol,
            worst=_sci(worst),
            tolerance=_sci(tol),
            detail=f"worst at {worst_at}",
        )
    )

    decreasing = True
    detail = ""
    prev = None
    for n in range(6, 41):
        err = abs(phi_asymptotic(n, cfg.bits) - phi_ref)
        if prev is not None and not err < prev:
            decreasing = False
            detail = f"error rose at n={n}"
        prev = err
    rows.append(
        CheckRow("golden", "asymptotic golden-ratio error strictly decreasing n in [6,40]", decreasing, detail=detail)
    )

    sample = 24
    corrected = phi_asymptotic(sample, cfg.bits)
    printed = phi_asymptotic(sample, cfg.bits, printed_exponent=True)
    rows.append(
        CheckRow(
            "golden",
            f"exponent variants at n={sample} (informational)",
            True,
            detail=(
                f"corrected (n-1)/2 -> {corrected.to_decimal(12)}, "
                f"printed n/2-1 -> {printed.to_decimal(12)}"
            ),
        )
    )
    return rows


def _suite_appendix(cfg: RunConfig) -> list[CheckRow]:
    tol = _tol10(cfg, 6)
    worst = BigReal(0, cfg.bits)
    worst_at = "-"
    for m in range(1, 5):
        for n in range(m + 2, 13):
            for h in range(0, (1 << m) - 1):
                res = verify_three_term(n, m, h, cfg.bits)
                if res > worst:
                    worst, worst_at = res, f"(n={n}, m={m}, h={h})"
    return [
        CheckRow(
            "appendix",
            "three-term identity sweep m <= 4, n <= 12",
            worst < tol,
            worst=_sci(worst),
            tolerance=_sci(tol),
            detail=f"worst at {worst_at}",
        )
    ]


def _suite_identities(cfg: RunConfig) -> list[CheckRow]:
    rows = []
    for n in range(1, 15):
        report = identity_suite(n, 50, cfg.bits, seed=cfg.seed)
        worst_name, worst = max(report.max_residuals.items(), key=lambda kv: kv[1])
        rows.append(
            CheckRow(
                "identities",
                f"four structural identities at depth {n} (50 samples)",
                report.passed,
                worst=_sci(worst),
                tolerance=_sci(report.tolerance),
                detail=f"worst: {worst_name}",
            )
        )
    return rows


_SUITE_RUNNERS = {
    "identities": _suite_identities,
    "ordering": _suite_ordering,
    "interleaving": _suite_interleaving,
    "exact-pi": _suite_exact_pi,
    "golden": _suite_golden,
    "appendix": _suite_appendix,
}


def cmd_verify(suite: str, cfg: RunConfig) -> int:
    names = list(_SUITE_RUNNERS) if suite == "all" else [suite]
    rows: list[CheckRow] = []
    for name in names:
        rows.extend(_SUITE_RUNNERS[name](cfg))
    failed = [r for r in rows if not r.passed]

    if cfg.output_format == "json":
        print(
            json.dumps(
                {
                    "digits": cfg.digits,
                    "passed": not failed,
                    "checks": [vars(r) for r in rows],
                },
                indent=2,
            )
        )
    else:
        out = [
            {
                "status": "PASS" if r.passed else "FAIL",
                "suite": r.suite,
                "check": r.name,
                "max_residual": r.worst,
                "tolerance": r.tolerance,
                "detail": r.detail,
            }
            for r in rows
        ]
        _emit_rows(out, ["status", "suite", "check", "max_residual", "tolerance", "detail"], cfg.output_format)
        if cfg.output_format == "text":
            print(f"{len(rows) - len(failed)}/{len(rows)} checks passed at {cfg.digits} digits")
    return 1 if failed else 0


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------


def _parse_range(text: str) -> range:
    if ".." in text:
        lo, hi = text.split("..", 1)
        return range(int(lo), int(hi) + 1)
    n = int(text)
    return range(n, n + 1)


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--digits", type=int, default=50, help="decimal precision (20..100000)")
    parser.add_argument("--format", choices=("text", "csv", "json"), default="text", dest="output_format")
    parser.add_argument("--seed", type=int, default=DEFAULT_SEED, help="seed for randomized suites")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="graypi",
        description="Nested square roots of 2 in Gray order: values, zero atlases, pi tables, verification suites.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_rad = sub.add_parser("radical", help="evaluate one nested radical and report its closed form")
    p_rad.add_argument("word", help="sign word over 0/1 (0 = plus, 1 = minus); may be empty")
    _add_common(p_rad)

    p_pi = sub.add_parser("pi", help="convergence table of a pi sequence")
    p_pi.add_argument("--method", choices=("classic", "gray"), required=True)
    p_pi.add_argument("--m", type=int, default=None, help="suffix order (gray method)")
    p_pi.add_argument("--h", type=int, default=None, help="suffix index h in [0, 2^m - 1] (gray method)")
    p_pi.add_argument("--n", type=_parse_range, required=True, metavar="A..B", help="depth range, e.g. 8..12")
    _add_common(p_pi)

    p_zeros = sub.add_parser("zeros", help="atlas of positive zeros at one depth")
    p_zeros.add_argument("--n", type=int, required=True, help="depth (2..24)")
    p_zeros.add_argument("--a", type=float, default=None, help="generalized-map parameter a > 0")
    _add_common(p_zeros)

    p_verify = sub.add_parser("verify", help="run a verification suite (exit 0 iff it passes)")
    p_verify.add_argument("--suite", choices=SUITES, default="all")
    _add_common(p_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = RunConfig(digits=args.digits, output_format=args.output_format, seed=args.seed)
        if args.command == "radical":
            return cmd_radical(args.word, cfg)
        if args.command == "pi":
            return cmd_pi(args.method, args.m, args.h, args.n, cfg)
        if args.command == "zeros":
            return cmd_zeros(args.n, args.a, cfg)
        if args.command == "verify":
            return cmd_verify(args.suite, cfg)
        raise AssertionError(f"unhandled command {args.command!r}")
    except (ValueError, ArithmeticError) as exc:
        print(f"graypi: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
