"""Command-line interface: ``imult compute|examples|verify|bench``.

Exit codes
----------
0  success
1  parse or usage error
2  mathematical error (for instance a constant input polynomial)
3  internal invariant violation, or a failed check in examples/verify
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from typing import NamedTuple, Sequence

import numpy as np

from .blowup import intersection_multiplicity
from .errors import InvariantViolation, MathError, UsageError
from .fulton import BudgetExhausted
from .harness import ALGORITHMS, BenchRow, bench, run_isolated
from .parse import parse_poly
from .properties import checked_im, finite_pair, run_suite

__all__ = ["main", "EXAMPLES", "Example", "parse_point"]

SEED_ENV = "IMULT_SEED"
VERIFY_PROPERTIES = (
    "symmetry",
    "zero_law",
    "lower_bound",
    "transversality",
    "affine_invariance",
    "product_additivity",
    "combination_invariance",
)


class Example(NamedTuple):
    name: str
    f: str
    g: str
    expected: int


EXAMPLES: tuple[Example, ...] = (
    Example("ellipse and circle", "5x^2+6xy+5y^2-10y", "x^2+(y-1)^2-1", 3),
    Example("tacnode and ramphoid cusp", "2x^4-3x^2y+y^2-2y^3+y^4",
            "x^4+x^2y^2-2x^2y-xy^2+y^2", 9),
    Example("lemniscate and four-leaved rose", "(x^2+y^2)^2-(x^2-y^2)",
            "(x^2+y^2)^3-(x^2-y^2)^2", 12),
)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def default_seed() -> int:
    raw = os.environ.get(SEED_ENV)
    if raw is None or raw == "":
        return 0
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"{SEED_ENV} must be an integer, got {raw!r}") from None


def parse_point(text: str) -> tuple[Fraction, Fraction]:
    """Parse ``"num[/den],num[/den]"`` into a pair of rationals."""
    parts = text.split(",")
    if len(parts) != 2:
        raise UsageError(f"point must look like 'px,py', got {text!r}")
    try:
        return tuple(Fraction(p.strip()) for p in parts)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"not a rational point: {text!r}") from None


def _positive(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if n < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {n}")
    return n


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="imult", description="Exact local intersection multiplicity of plane curves.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("compute", help="intersection multiplicity of two curves at a point")
    c.add_argument("--f", required=True, help="first polynomial, e.g. '5x^2+6xy+5y^2-10y'")
    c.add_argument("--g", required=True, help="second polynomial")
    c.add_argument("--point", default="0,0", help="rational point 'px,py' (default 0,0)")
    c.add_argument("--json", action="store_true", help="emit a JSON document")
    c.add_argument("--trace", action="store_true", help="print the configuration tree")

    e = sub.add_parser("examples", help="run the three built-in worked examples")
    e.add_argument("--json", action="store_true")

    v = sub.add_parser("verify", help="compare against the axioms oracle and run property suites")
    v.add_argument("--trials", type=_positive, default=200)
    v.add_argument("--seed", type=int, default=None, help=f"default: ${SEED_ENV} or 0")
    v.add_argument("--max-deg", type=_positive, default=5)
    v.add_argument("--max-mult", type=_positive, default=3)
    v.add_argument("--timeout-ms", type=_positive, default=10_000)
    v.add_argument("--property-trials", type=int, default=100,
                   help="instances per property suite; 0 skips the suites")
    v.add_argument("--f", help="fixed first curve, used for the leading trial")
    v.add_argument("--g", help="fixed second curve, used for the leading trial")
    v.add_argument("--json", action="store_true")

    b = sub.add_parser("bench", help="time both algorithms on random curve pairs")
    b.add_argument("--deg", type=_positive, required=True)
    b.add_argument("--mult", type=_positive, required=True)
    b.add_argument("--trials", type=_positive, default=10)
    b.add_argument("--timeout-ms", type=_positive, default=10_000)
    b.add_argument("--seed", type=int, default=None, help=f"default: ${SEED_ENV} or 0")
    b.add_argument("--bound", type=_positive, default=10, help="coefficient bound")
    b.add_argument("--csv", help="write per-trial timings to this file")
    b.add_argument("--json", action="store_true")
    return p


def _value_text(value) -> str:
    return "infinity" if value == float("inf") else str(int(value))


def cmd_compute(args, out) -> int:
    f, g = parse_poly(args.f), parse_poly(args.g)
    P = parse_point(args.point)
    rep = intersection_multiplicity(f, g, P)
    if args.json:
        print(json.dumps(rep.to_dict(), indent=2), file=out)
        return 0
    print(_value_text(rep.value), file=out)
    if args.trace:
        if rep.tree is None:
            reason = "common component" if rep.is_infinite else "point not on both curves"
            print(f"(no configuration tree: {reason})", file=out)
        else:
            print(rep.tree.render(), file=out)
    return 0


def cmd_examples(args, out) -> int:
    results = []
    for ex in EXAMPLES:
        rep = intersection_multiplicity(parse_poly(ex.f), parse_poly(ex.g))
        got = rep.to_dict()["value"]
        results.append({"name": ex.name, "f": ex.f, "g": ex.g, "expected": ex.expected,
                        "computed": got, "pass": got == ex.expected})
    if args.json:
        print(json.dumps(results, indent=2), file=out)
    else:
        for r in results:
            tag = "PASS" if r["pass"] else "FAIL"
            line = f"{tag} {r['name']}: expected {r['expected']}, computed {r['computed']}"
            if not r["pass"]:
                line += f" (diff {r['computed']} != {r['expected']})"
            print(line, file=out)
    return 0 if all(r["pass"] for r in results) else 3


def cmd_verify(args, out) -> int:
    seed = default_seed() if args.seed is None else args.seed
    if (args.f is None) != (args.g is None):
        raise UsageError("--f and --g must be given together")
    fixed = [(parse_poly(args.f), parse_poly(args.g))] if args.f is not None else []
    rng = np.random.default_rng(seed)
    agree = disagree = dnf = 0
    mismatches = []
    for t in range(args.trials):
        if t < len(fixed):
            f, g = fixed[t]
        else:
            f, g = finite_pair(rng, max_deg=args.max_deg, max_mult=args.max_mult)
        value = checked_im(f, g).value
        oracle = run_isolated(ALGORITHMS["axioms"], (f, g), args.timeout_ms / 1000)
        if oracle.dnf:
            dnf += 1
        elif oracle.value == value:
            agree += 1
        else:
            disagree += 1
            mismatches.append({"trial": t, "f": str(f), "g": str(g), "blowup": value,
                               "axioms": oracle.value, "error": oracle.error})
    suites = [run_suite(name, args.property_trials, seed)
              for name in VERIFY_PROPERTIES if args.property_trials > 0]
    failed = disagree + sum(s.failed for s in suites)
    if args.json:
        doc = {
            "seed": seed,
            "trials": args.trials,
            "agreements": agree,
            "disagreements": disagree,
            "oracle_dnf": dnf,
            "mismatches": mismatches,
            "properties": {s.name: {"passed": s.passed, "failed": s.failed,
                                    "failures": s.failures[:5]} for s in suites},
        }
        print(json.dumps(doc, indent=2, default=str), file=out)
    else:
        print(f"{args.trials} trials, {disagree} disagreements "
              f"({agree} agreements, {dnf} oracle DNF skipped)", file=out)
        for m in mismatches:
            print(f"  trial {m['trial']}: blowup {m['blowup']} vs axioms {m['axioms']}"
                  f" for f = {m['f']}, g = {m['g']}", file=out)
        for s in suites:
            print(f"property {s}", file=out)
            for detail in s.failures[:5]:
                print(f"  {detail}", file=out)
    return 3 if failed else 0


def cmd_bench(args, out) -> int:
    seed = default_seed() if args.seed is None else args.seed
    if args.mult > args.deg:
        raise UsageError("--mult cannot exceed --deg")
    row = bench(args.deg, args.mult, args.trials, args.timeout_ms, seed, args.bound,
                csv_path=args.csv)
    if args.json:
        doc = {"deg": row.degree, "mult": row.multiplicity, "trials": row.trials,
               "values": sorted({v for v in row.values if v is not None}, key=float)}
        for alg in ALGORITHMS:
            doc[alg] = {"median_ms": row.median_ms(alg), "mean_ms": row.mean_ms(alg),
                        "dnf": row.dnf(alg)}
        print(json.dumps(doc, indent=2, default=str), file=out)
    else:
        print(BenchRow.header(), file=out)
        print(row.format(), file=out)
        print("median: " + ", ".join(f"{alg} {row.median_ms(alg):.2f} ms" for alg in ALGORITHMS),
              file=out)
    return 0


COMMANDS = {"compute": cmd_compute, "examples": cmd_examples, "verify": cmd_verify,
            "bench": cmd_bench}


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = sys.stdout if out is None else out
    try:
        args = build_parser().parse_args(argv)
        return COMMANDS[args.command](args, out)
    except UsageError as exc:
        print(f"imult: error: {exc}", file=sys.stderr)
        return 1
    except MathError as exc:
        print(f"imult: math error: {exc}", file=sys.stderr)
        return 2
    except (InvariantViolation, BudgetExhausted) as exc:
        print(f"imult: internal error: {exc}", file=sys.stderr)
        return 3


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
