"""Command-line front end: check execution, normal forms, series display,
and the numeric oracles.

Exit codes: 0 all pass, 1 a check failed, 2 usage or parse error,
3 resource cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .algebra import (
    Element,
    ResourceCapExceeded,
    Shape,
    element_str,
    set_max_terms,
)
from .checks import ALIASES, REGISTRY, run_all, run_check
from .series import Series

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--m", type=int, default=1, help="even block size")
    common.add_argument("--n", type=int, default=1, help="odd block size")
    common.add_argument("--order", type=int, default=None,
                        help="series truncation order (default 4; 3 for (2|2))")
    common.add_argument("--convention", choices=("twisted", "plain", "auto"),
                        default="plain", help="matrix convention")
    common.add_argument("--json", action="store_true",
                        help="machine-readable output")
    common.add_argument("--jobs", type=int, default=1, help="worker count")
    common.add_argument("--max-terms", type=int, default=None,
                        help="resource cap on term counts")

    ap = argparse.ArgumentParser(
        prog="yangian",
        description="Exact identity checks for the RTT super Yangian.",
    )
    sub = ap.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("check", parents=[common],
                       help="run a named identity check (or all)")
    p.add_argument("name", help="check name or 'all'")

    p = sub.add_parser("nf", parents=[common],
                       help="print the normal form of an expression")
    p.add_argument("expr", help="expression text")

    p = sub.add_parser("show", parents=[common],
                       help="print a named series or decomposition")
    p.add_argument("what", choices=("ber", "qdet", "gauss"))

    p = sub.add_parser("oracle", parents=[common],
                       help="run a numeric oracle")
    p.add_argument("which", choices=("rtt", "rep"))
    return ap


def _resolved_order(args) -> int:
    if args.order is not None:
        return args.order
    from .checks import default_order

    return default_order(Shape(args.m, args.n))


def _render_value(value) -> str:
    if isinstance(value, Element):
        return element_str(value)
    if isinstance(value, (Series, Fraction)):
        return str(value)
    return str(value)


def cmd_check(args, shape: Shape, order: int) -> int:
    name = args.name
    if name != "all" and ALIASES.get(name, name) not in REGISTRY:
        print(f"unknown check {name!r}; known: "
              + ", ".join(sorted(REGISTRY)), file=sys.stderr)
        return EXIT_USAGE
    if name == "all":
        reports = run_all(shape, order, args.convention, jobs=args.jobs)
    else:
        reports = [run_check(name, shape, order, args.convention)]
    if args.json:
        if len(reports) == 1:
            print(reports[0].to_json())
        else:
            print(json.dumps([r.to_dict() for r in reports]))
    else:
        for r in reports:
            print(f"{r.check}: {r.verdict} (m={r.m} n={r.n} order={r.order} "
                  f"convention={r.convention} {r.elapsed_ms}ms)")
            for w in r.witnesses:
                print(f"  powers={w['powers']} indices={w['indices']} "
                      f"residual={w['residual']}")
    return EXIT_PASS if all(r.passed for r in reports) else EXIT_FAIL


def cmd_nf(args, shape: Shape, order: int) -> int:
    from .parsing import ExprError, parse_expression

    try:
        value = parse_expression(args.expr, shape, order, args.convention)
    except ExprError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print(_render_value(value))
    return EXIT_PASS


def cmd_show(args, shape: Shape, order: int) -> int:
    conv = args.convention if args.convention != "auto" else "plain"
    if args.what == "ber":
        from .berezinian import berezinian_sum

        print(berezinian_sum(shape, order, conv))
    elif args.what == "qdet":
        from .berezinian import quantum_determinant

        print(quantum_determinant(shape, order))
    else:
        from .matrixops import gauss

        F, D, E = gauss(shape, order, conv)
        M = shape.size
        for i in range(1, M + 1):
            print(f"d({i}) = {D.entry(i, i)}")
        for i in range(1, M + 1):
            for j in range(i + 1, M + 1):
                print(f"e({i},{j}) = {E.entry(i, j)}")
        for j in range(1, M + 1):
            for i in range(j + 1, M + 1):
                print(f"f({i},{j}) = {F.entry(i, j)}")
    return EXIT_PASS


def cmd_oracle(args, shape: Shape, order: int) -> int:
    if args.which == "rtt":
        from .oracle import rtt_tensor_check

        conv = args.convention if args.convention != "auto" else "plain"
        ok, witness, rep = rtt_tensor_check(shape, conv)
        if args.json:
            print(json.dumps({"oracle": "rtt", "m": shape.m, "n": shape.n,
                              "family": rep.family,
                              "verdict": "pass" if ok else "fail",
                              "witness": witness}))
        else:
            print(f"rtt tensor check: {'pass' if ok else 'fail'} "
                  f"(rep family {rep.family})")
            if witness:
                print(f"  witness: {witness}")
        return EXIT_PASS if ok else EXIT_FAIL
    from .oracle import find_eval_rep

    rep = find_eval_rep(shape)
    if args.json:
        print(json.dumps({"oracle": "rep", "m": shape.m, "n": shape.n,
                          "family": rep.family, "verdict": "pass"}))
    else:
        print(f"evaluation representation found: sign family {rep.family}")
    return EXIT_PASS


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    if args.m < 0 or args.n < 0 or args.m + args.n == 0:
        print("shape must have m, n >= 0 and m + n >= 1", file=sys.stderr)
        return EXIT_USAGE
    if args.max_terms is not None:
        set_max_terms(args.max_terms)
    shape = Shape(args.m, args.n)
    order = _resolved_order(args)
    handler = {"check": cmd_check, "nf": cmd_nf, "show": cmd_show,
               "oracle": cmd_oracle}[args.subcommand]
    try:
        return handler(args, shape, order)
    except ResourceCapExceeded as exc:
        print(f"resource cap exceeded: {exc}", file=sys.stderr)
        return EXIT_RESOURCE


if __name__ == "__main__":
    sys.exit(main())
