"""Command-line front end.

    conesigma eval EXPR [--window N] [--format json|csv] [--ring R]
    conesigma check SUITE [--seed S] [--window N]
    conesigma ore N --expr E [--window N] [--ring R]
    conesigma hh --algebra FILE --top N

Exit status: 0 success, 1 a check failed, 2 usage or parse error.
"""
from __future__ import annotations

import argparse
import json
import sys

from .coeff import load_algebra_spec, ring_from_text
from .cone import Finite, window_render
from .dsl import evaluate, max_window, parse_expr, render_window
from .errors import BudgetExceeded, ConeSigmaError, DSLError, PreconditionError
from .hochschild import commutator_quotient_dim, hh_dims
from .sigma import ore_ann_witness, ore_move_witness
from .suites import SUITES, run_suite

INDEXING_NOTE = (
    "Indices are 0-based: E(k,l) here is the matrix unit written E_{k+1,l+1} in "
    "1-based notation; In(n) has ones at (0,0)..(n-1,n-1); Ibar(n) = I - In(n)."
)

HH_NOTE = (
    "Dimensions are computed for finite-dimensional algebras only; the homology of "
    "the infinite matrix algebras themselves is not computed."
)


def _ring(text):
    try:
        return ring_from_text(text)
    except (ValueError, ConeSigmaError) as exc:
        raise argparse.ArgumentTypeError(str(exc))


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--ring", type=_ring, default=ring_from_text("Q"),
                        help="coefficient ring: Q, Z or Zp:<p> (default Q)")
    common.add_argument("--window", type=int, default=None, help="window size")
    common.add_argument("--seed", type=int, default=1)
    common.add_argument("--format", choices=("json", "csv"), default="json")

    parser = argparse.ArgumentParser(
        prog="conesigma",
        description="Exact infinite-matrix algebra: the cone, its finite-matrix ideal "
        "and the quotient.  " + INDEXING_NOTE,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", parents=[common], help="render a window of an expression",
                       description=INDEXING_NOTE)
    p.add_argument("expr")

    p = sub.add_parser("check", parents=[common], help="run a verification suite")
    p.add_argument("suite", choices=[*SUITES, "all"])

    p = sub.add_parser("ore", parents=[common], help="Ore witnesses for Ibar(n) and E",
                       description=INDEXING_NOTE)
    p.add_argument("n", type=int)
    p.add_argument("--expr", required=True)

    p = sub.add_parser("hh", parents=[common], help="Hochschild homology dimensions",
                       description=HH_NOTE)
    p.add_argument("--algebra", required=True, help="algebra JSON file (field/basis/unit/table)")
    p.add_argument("--top", type=int, required=True, help="top degree N")
    return parser


def _cmd_eval(args, out):
    n = 8 if args.window is None else args.window
    out.write(render_window(args.expr, n, args.format, args.ring))
    return 0


def _cmd_check(args, out):
    results = run_suite(args.suite, args.seed, args.window, echo=lambda s: print(s, file=out))
    failed = sum(not r.passed for r in results)
    print(f"{len(results) - failed}/{len(results)} checks passed", file=out)
    return 1 if failed else 0


def _cmd_ore(args, out):
    R = args.ring
    E = evaluate(parse_expr(args.expr), R)
    window = 16 if args.window is None else args.window
    if window > max_window():
        raise BudgetExceeded(f"window {window} exceeds the maximum {max_window()}")
    m, Eprime = ore_move_witness(args.n, E)
    block = window_render(Eprime, range(window), range(window))
    doc = {
        "n": args.n,
        "m": m,
        "verified": True,
        "Eprime": {
            "rows": window, "cols": window,
            "entries": [[i, j, R.format(v)] for i, row in enumerate(block)
                        for j, v in enumerate(row) if not R.is_zero(v)],
        },
        "annihilator": None,
    }
    if isinstance(E.cert, Finite):
        try:
            doc["annihilator"] = ore_ann_witness(args.n, E)
        except PreconditionError:
            pass
    out.write(json.dumps(doc) + "\n")
    return 0


def _cmd_hh(args, out):
    A = load_algebra_spec(args.algebra)
    result = hh_dims(A, args.top)
    doc = {
        "field": str(A.base),
        "basis": list(A.labels),
        "top": args.top,
        "dims": list(result.dims),
        "hh0_commutator_quotient": commutator_quotient_dim(A),
    }
    out.write(json.dumps(doc) + "\n")
    return 0


COMMANDS = {"eval": _cmd_eval, "check": _cmd_check, "ore": _cmd_ore, "hh": _cmd_hh}


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args, out)
    except DSLError as exc:
        print(f"conesigma: parse error: {exc}", file=sys.stderr)
    except (BudgetExceeded, PreconditionError, ValueError, OSError) as exc:
        print(f"conesigma: {exc}", file=sys.stderr)
    return 2


if __name__ == "__main__":
    sys.exit(main())
