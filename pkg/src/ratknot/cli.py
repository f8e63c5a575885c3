"""Command-line front end.

Examples::

    ratknot det 4,-3
    ratknot poly 4 --part even
    ratknot colors 3 --modulus 3 --method snf
    ratknot trees 2,2,2 --method matrix
    ratknot propagate 3 --a 0 --b 1
    ratknot verify --max-n 3 --max-len 5
"""

from __future__ import annotations

import argparse
import json
import re
import sys

from ratknot.diagram import build_plat, checkerboard_graph, coloring_matrix
from ratknot.linalg import (
    DEFAULT_BRUTE_FORCE_CAP,
    BruteForceLimitExceeded,
    count_colorings_bruteforce,
    count_colorings_formula,
    count_colorings_snf,
    tree_count_matrix,
    tree_count_recursion,
)
from ratknot.polynomials import InvalidTwistError, TwistVector, build_p, propagate_numeric, reduced_cse
from ratknot.verify import run_sweep

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_DISCREPANCY = 3
EXIT_BOUND = 4

_TWIST_RE = re.compile(r"^\s*-?\d+(\s*,\s*-?\d+)*\s*$")


def _twist(text: str) -> TwistVector:
    try:
        return TwistVector.parse(text)
    except InvalidTwistError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _modulus(text: str) -> int:
    try:
        r = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid modulus {text!r}")
    if r < 2:
        raise argparse.ArgumentTypeError(f"modulus must be >= 2, got {r}")
    return r


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("plain", "json"), default="plain")

    parser = argparse.ArgumentParser(
        prog="ratknot",
        description="Determinants, Fox colorings and spanning trees of rational knots R(n1,...,nN).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("det", parents=[common], help="signed and absolute determinant")
    p.add_argument("twists", type=_twist, help="comma-separated nonzero twists, e.g. 4,-3")

    p = sub.add_parser("poly", parents=[common], help="print p_N, p_N^e or p_N^o")
    p.add_argument("n", type=int)
    p.add_argument("--part", choices=("full", "even", "odd"), default="full")

    p = sub.add_parser("colors", parents=[common], help="number of Fox colorings mod r")
    p.add_argument("twists", type=_twist)
    p.add_argument("--modulus", "-r", type=_modulus, required=True)
    p.add_argument("--method", choices=("formula", "snf", "brute"), default="formula")
    p.add_argument("--cap", type=int, default=DEFAULT_BRUTE_FORCE_CAP, help="brute-force work bound")

    p = sub.add_parser("trees", parents=[common], help="spanning trees of the checkerboard graph")
    p.add_argument("twists", type=_twist)
    p.add_argument("--method", choices=("recursion", "matrix"), default="recursion")

    p = sub.add_parser("propagate", parents=[common], help="bottom colors (l, m, r) for top colors a, b")
    p.add_argument("twists", type=_twist)
    p.add_argument("--a", type=int, default=0)
    p.add_argument("--b", type=int, default=1)

    p = sub.add_parser("verify", parents=[common], help="cross-method consistency sweep")
    p.add_argument("--max-n", type=int, default=3, help="largest |n_i|")
    p.add_argument("--max-len", type=int, default=5, help="largest N")
    p.add_argument("--color-max-len", type=int, default=4, help="largest N for coloring counts")
    p.add_argument("--max-modulus", type=int, default=7)
    p.add_argument("--positive", action="store_true", help="only positive twists")
    p.add_argument("--jobs", type=int, default=1)
    return parser


def _protect_twists(argv: list[str]) -> list[str]:
    # argparse reads "-3,4" as an option; a leading space keeps it positional
    return [" " + a if a.startswith("-") and _TWIST_RE.match(a) and not _is_number(a) else a for a in argv]


def _is_number(a: str) -> bool:
    return re.fullmatch(r"-\d+", a) is not None


def _emit(args, plain: str, payload: dict) -> None:
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True))
    else:
        print(plain)


def run(args) -> int:
    cmd = args.command
    if cmd == "det":
        eq = reduced_cse(args.twists)
        signed = eq.coefficient
        _emit(
            args,
            f"signed={signed} abs={abs(signed)} equation={eq}",
            {"twists": list(args.twists), "signed": signed, "abs": abs(signed), "equation": str(eq)},
        )
    elif cmd == "poly":
        if args.n < 0:
            raise ValueError(f"N must be non-negative, got {args.n}")
        poly = build_p(args.n, args.part)
        _emit(args, str(poly), {"n": args.n, "part": args.part, "poly": str(poly)})
    elif cmd == "colors":
        tw, r = args.twists, args.modulus
        if r == 2:
            print("warning: modulus 2 lies outside the usual range r >= 3", file=sys.stderr)
        if args.method == "formula":
            count = count_colorings_formula(tw, r)
        elif args.method == "snf":
            count = count_colorings_snf(coloring_matrix(build_plat(tw)), r)
        else:
            count = count_colorings_bruteforce(build_plat(tw), r, cap=args.cap)
        _emit(args, str(count), {"twists": list(tw), "modulus": r, "method": args.method, "count": count})
    elif cmd == "trees":
        tw = args.twists
        if args.method == "recursion":
            trees = tree_count_recursion(tw)
        else:
            trees = tree_count_matrix(checkerboard_graph(tw))
        _emit(args, str(trees), {"twists": list(tw), "method": args.method, "trees": trees})
    elif cmd == "propagate":
        l, m, r = propagate_numeric(args.twists, args.a, args.b)
        _emit(args, f"l={l} m={m} r={r}", {"twists": list(args.twists), "a": args.a, "b": args.b, "l": l, "m": m, "r": r})
    elif cmd == "verify":
        report = run_sweep(
            max_n=args.max_n,
            max_len=args.max_len,
            color_max_len=args.color_max_len,
            max_modulus=args.max_modulus,
            signed=not args.positive,
            jobs=args.jobs,
        )
        if report.ok:
            plain = (
                f"ok: {report.determinant_cases} determinant cases, "
                f"{report.coloring_cases} coloring cases"
            )
        else:
            plain = f"discrepancy: {report.discrepancies[0]}"
        _emit(
            args,
            plain,
            {
                "ok": report.ok,
                "determinant_cases": report.determinant_cases,
                "coloring_cases": report.coloring_cases,
                "discrepancies": [str(d) for d in report.discrepancies],
            },
        )
        return EXIT_OK if report.ok else EXIT_DISCREPANCY
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    args = parser.parse_args(_protect_twists(argv))
    try:
        return run(args)
    except BruteForceLimitExceeded as exc:
        print(f"error: {exc}; use --method snf or formula", file=sys.stderr)
        return EXIT_BOUND
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
