"""Command-line harness.

Exit codes: 0 all formulas matched, 1 mismatch, 2 usage/input error,
3 resource budget exceeded.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
import time

from . import lab
from .atoms import syntactic_semigroup_size
from .automata import canonical, effective_alphabet, subset_construction
from .errors import BudgetExceeded, FormatError, PreconditionError
from .formulas import FORMULAS
from .ops import (
    BoolOp,
    direct_product,
    product_nfa,
    product_subset_census,
    reverse_nfa,
    star_nfa,
)
from .serialize import dfa_to_dict, load_dfa, to_dot
from .witnesses import witness

log = logging.getLogger("sclab")

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3

BINARY_OPS = ("union", "symdiff", "difference", "intersection", "concat", "product")
UNARY_OPS = ("star", "reverse")


class UsageError(Exception):
    pass


def parse_range(text: str) -> list:
    """``"3..6"``, ``"4"`` or ``"3,5,7"``."""
    try:
        if ".." in text:
            lo, hi = text.split("..")
            values = list(range(int(lo), int(hi) + 1))
        else:
            values = [int(v) for v in text.split(",")]
    except ValueError:
        raise UsageError(f"bad range {text!r}; use e.g. 3..6") from None
    if not values:
        raise UsageError(f"empty range {text!r}")
    return values


def _emit(text: str):
    sys.stdout.write(text)


def cmd_witness(args) -> int:
    try:
        n = int(args.n)
    except ValueError:
        raise UsageError(f"--n must be an integer, got {args.n!r}")
    if n < 3:
        raise UsageError("--n must be at least 3")
    d = witness(n, args.dialect)
    if args.format == "dot":
        _emit(to_dot(d, name=f"L_{n}({args.dialect})"))
    elif args.format == "json":
        _emit(json.dumps(dfa_to_dict(d)) + "\n")
    else:
        raise UsageError("witness supports --format json or dot")
    return EXIT_OK


def cmd_apply(args) -> int:
    op = args.op
    left = load_dfa(args.left)
    if op in BINARY_OPS:
        if args.right is None:
            raise UsageError(f"{op} needs two input files")
        right = load_dfa(args.right)
    elif args.right is not None:
        raise UsageError(f"{op} takes a single input file")

    extra = {}
    if op in ("concat", "product"):
        raw, subsets = subset_construction(product_nfa(left, right), args.budget)
        labels = subsets
        extra["census"] = product_subset_census(left, right, args.budget).as_dict()
    elif op == "star":
        raw, labels = subset_construction(star_nfa(left), args.budget)
    elif op == "reverse":
        raw, labels = subset_construction(reverse_nfa(left), args.budget)
    else:
        raw, labels = direct_product(left, right, BoolOp(op))
    result = canonical(raw)
    kappa = result.n
    empty_alphabet = len(effective_alphabet(raw)) == 0
    if empty_alphabet:
        log.warning("result has an empty alphabet; kappa=1 is a convention, not a measured bound")

    shown, shown_labels = (raw, labels) if args.raw else (result, None)
    if args.format == "json":
        body = {"op": op, "kappa": kappa}
        if empty_alphabet:
            body["kappa_convention"] = "empty-alphabet"
        body.update(extra)
        body["dfa"] = dfa_to_dict(shown, shown_labels)
        _emit(json.dumps(body, ensure_ascii=False) + "\n")
    elif args.format == "dot":
        _emit(f"// kappa = {kappa}\n" + to_dot(shown, shown_labels, name=op))
    else:
        raise UsageError("apply supports --format json or dot")
    return EXIT_OK


def _ops_list(args) -> list:
    if args.all or args.ops in (None, "all"):
        return list(lab.ALL_OPS)
    ops = [o.strip() for o in args.ops.split(",") if o.strip()]
    unknown = [o for o in ops if o not in FORMULAS]
    if unknown:
        raise UsageError(f"unknown ops {unknown}; known: {', '.join(lab.ALL_OPS)}")
    return ops


def cmd_verify(args) -> int:
    if args.format not in ("md", "csv", "json"):
        raise UsageError("verify supports --format md, csv or json")
    ops = _ops_list(args)
    m_range = parse_range(args.m) if args.m else None
    n_range = parse_range(args.n) if args.n else None
    cells = lab.grid(ops, m_range, n_range)
    for op, m, n in cells:
        if n < 3 or (m is not None and m < 3):
            raise UsageError("witness sizes must be at least 3")
    records = lab.run_grid(cells, args.budget, args.jobs)
    _emit(lab.render_records(records, args.format, timing=not args.no_timing))
    bad = [r for r in records if not r.match]
    for r in bad:
        print(f"MISMATCH {r.op} m={r.m} n={r.n}: measured {r.measured}, formula {r.formula}", file=sys.stderr)
    return EXIT_MISMATCH if bad else EXIT_OK


def cmd_atoms(args) -> int:
    if args.format not in ("md", "csv", "json"):
        raise UsageError("atoms supports --format md, csv or json")
    try:
        n = int(args.n)
    except ValueError:
        raise UsageError(f"--n must be an integer, got {args.n!r}")
    if n < 3:
        raise UsageError("--n must be at least 3")
    if n > args.max_n:
        raise BudgetExceeded("atoms n", args.max_n)
    report = lab.atom_report(n, args.dialect, args.budget)
    _emit(lab.render_atoms(report, args.format))
    return EXIT_OK if lab.atom_report_ok(report) else EXIT_MISMATCH


def cmd_semigroup(args) -> int:
    if args.format not in ("md", "csv", "json"):
        raise UsageError("semigroup supports --format md, csv or json")
    records = []
    for n in parse_range(args.n):
        if n < 3:
            raise UsageError("--n must be at least 3")
        start = time.perf_counter()
        size = syntactic_semigroup_size(witness(n, args.dialect), args.budget)
        elapsed = time.perf_counter() - start
        expected = n**n
        records.append(
            lab.ComplexityRecord("semigroup", None, n, size, expected, size == expected, f"L_n({args.dialect})", elapsed)
        )
    _emit(lab.render_records(records, args.format, timing=not args.no_timing))
    return EXIT_OK if all(r.match for r in records) else EXIT_MISMATCH


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="sclab", description=__doc__.splitlines()[0])
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    def budget(sp):
        sp.add_argument("--budget", type=int, default=None, help="state/element budget")

    w = sub.add_parser("witness", help="print a dialect of the universal witness")
    w.add_argument("--n", required=True)
    w.add_argument("--dialect", default="a,b,c,d")
    w.add_argument("--format", default="json", choices=["json", "dot", "md", "csv"])
    w.set_defaults(func=cmd_witness)

    a = sub.add_parser("apply", help="apply an operation to DFA files")
    a.add_argument("op", choices=BINARY_OPS + UNARY_OPS)
    a.add_argument("left")
    a.add_argument("right", nargs="?")
    a.add_argument("--format", default="json", choices=["json", "dot", "md", "csv"])
    a.add_argument("--raw", action="store_true", help="print the unminimized construction with labels")
    budget(a)
    a.set_defaults(func=cmd_apply)

    v = sub.add_parser("verify", help="sweep witness grids against the formulas")
    v.add_argument("--ops", default=None, help="comma-separated ops, or 'all'")
    v.add_argument("--all", action="store_true")
    v.add_argument("--m", default=None)
    v.add_argument("--n", default=None)
    v.add_argument("--format", default="md", choices=["json", "dot", "md", "csv"])
    v.add_argument("--no-timing", action="store_true")
    v.add_argument("--jobs", type=int, default=1)
    budget(v)
    v.set_defaults(func=cmd_verify)

    t = sub.add_parser("atoms", help="atom complexities of L_n(a,b,c)")
    t.add_argument("--n", required=True)
    t.add_argument("--dialect", default="a,b,c")
    t.add_argument("--max-n", type=int, default=5)
    t.add_argument("--format", default="md", choices=["json", "dot", "md", "csv"])
    budget(t)
    t.set_defaults(func=cmd_atoms)

    s = sub.add_parser("semigroup", help="syntactic semigroup sizes of L_n(a,b,c)")
    s.add_argument("--n", required=True)
    s.add_argument("--dialect", default="a,b,c")
    s.add_argument("--format", default="md", choices=["json", "dot", "md", "csv"])
    s.add_argument("--no-timing", action="store_true")
    budget(s)
    s.set_defaults(func=cmd_semigroup)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, stream=sys.stderr)
    try:
        return args.func(args)
    except (UsageError, FormatError, PreconditionError) as e:
        print(f"sclab: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as e:
        print(f"sclab: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceeded as e:
        print(f"sclab: {e}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
