"""Command-line front end: ``hermvar table | poly | verify``.

Exit codes: 0 success / all identities hold, 1 some identity failed,
2 usage error (bad flag, out-of-range parameter, violated precondition).
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import coeffs, identities
from .hermite import HermiteKind, hermite
from .poly import render_rational

TABLE_CAP = 200
POLY_CAP = 500
VERIFY_CAP = 200

SUITE_CHOICES = ["all", *identities.SUITES]


def _nonneg_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {value}")
    return value


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"expected an exact rational such as 3 or -2/5, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hermvar",
        description="Exact Hermite polynomials of variance nu and their coefficient triangle.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "json"], default="text")
    common.add_argument("--out", metavar="PATH", help="also write the output bytes to PATH")
    common.add_argument("--unsafe-no-cap", action="store_true", help="lift the size caps")

    sub = parser.add_subparsers(dest="subcommand", required=True)

    table = sub.add_parser("table", parents=[common], help="print the triangle a_i(N, nu)")
    table.add_argument("--max-n", type=_nonneg_int, default=6)
    table.add_argument("--matrix", action="store_true", help="square (a_i(j, nu)) view")

    poly = sub.add_parser("poly", parents=[common], help="print or evaluate one Hermite polynomial")
    poly.add_argument("--kind", choices=[k.value for k in HermiteKind], default="variance")
    poly.add_argument("--n", type=_nonneg_int, required=True)
    poly.add_argument("--x", type=_rational, dest="x_value")
    poly.add_argument("--nu", type=_rational, dest="nu_value")

    verify = sub.add_parser("verify", parents=[common], help="run identity verification suites")
    verify.add_argument("--suite", choices=SUITE_CHOICES, default="all")
    d = identities.DEFAULT_BOUNDS
    verify.add_argument("--max-k", type=_nonneg_int, default=d["max_k"])
    verify.add_argument("--max-N", type=_nonneg_int, default=d["max_N"], dest="max_N", metavar="N")
    verify.add_argument("--max-m", type=_nonneg_int, default=d["max_m"])
    verify.add_argument("--max-n", type=_nonneg_int, default=d["max_n"], metavar="n")
    verify.add_argument("--truncation", type=_nonneg_int, default=d["truncation"])
    verify.add_argument("--thm3-max-N", type=_nonneg_int, default=d["thm3_max_N"], dest="thm3_max_N", metavar="N")
    verify.add_argument("--full", action="store_true", help="list every failure, not just the first 5")
    for sp in (table, poly, verify):
        sp.set_defaults(subparser=sp)
    return parser


def _cmd_table(args, parser) -> tuple[str, int]:
    if args.max_n > TABLE_CAP and not args.unsafe_no_cap:
        parser.error(f"--max-n {args.max_n} exceeds the cap {TABLE_CAP} (use --unsafe-no-cap)")
    if args.matrix:
        matrix = coeffs.emit_matrix(args.max_n)
        if args.format == "json":
            obj = {"max_index": args.max_n, "matrix": [[e.pairs() for e in row] for row in matrix]}
            return json.dumps(obj) + "\n", 0
        return "".join(", ".join(str(e) for e in row) + "\n" for row in matrix), 0
    table = coeffs.build_table_recurrence(args.max_n)
    if args.format == "json":
        return json.dumps(table.to_json_obj()) + "\n", 0
    return "".join(", ".join(str(e) for e in row) + "\n" for row in table.rows), 0


def _cmd_poly(args, parser) -> tuple[str, int]:
    if args.n > POLY_CAP and not args.unsafe_no_cap:
        parser.error(f"--n {args.n} exceeds the cap {POLY_CAP} (use --unsafe-no-cap)")
    if args.nu_value is not None and args.kind != "variance":
        parser.error("--nu only applies to --kind variance")
    p = hermite(args.kind, args.n)
    if args.x_value is not None or args.nu_value is not None:
        p = p.subs(x=args.x_value, nu=args.nu_value)
    if p.degree_x() in (None, 0) and p.degree_nu() in (None, 0):
        text = render_rational(p.constant_term())
    else:
        text = str(p)
    if args.format == "json":
        obj = {"kind": args.kind, "n": args.n, "x": _opt(args.x_value), "nu": _opt(args.nu_value), "result": text}
        return json.dumps(obj) + "\n", 0
    return text + "\n", 0


def _opt(value):
    return None if value is None else render_rational(value)


def _cmd_verify(args, parser) -> tuple[str, int]:
    bounds = {
        "max_k": args.max_k,
        "max_N": args.max_N,
        "max_m": args.max_m,
        "max_n": args.max_n,
        "truncation": args.truncation,
        "thm3_max_N": args.thm3_max_N,
    }
    if not args.unsafe_no_cap:
        over = [k for k, v in bounds.items() if v > VERIFY_CAP]
        if over:
            parser.error(f"{', '.join(over)} exceed the cap {VERIFY_CAP} (use --unsafe-no-cap)")
    try:
        identities.check_bounds(args.suite, bounds)
    except ValueError as exc:
        parser.error(str(exc))
    reports = identities.run_suite(args.suite, bounds)
    code = 0 if all(r.passed for r in reports) else 1
    if args.format == "json":
        return json.dumps([r.to_dict() for r in reports], indent=2) + "\n", code
    return "".join(r.render(full=args.full) + "\n" for r in reports), code


_COMMANDS = {"table": _cmd_table, "poly": _cmd_poly, "verify": _cmd_verify}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        text, code = _COMMANDS[args.subcommand](args, args.subparser)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    sys.stdout.write(text)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    return code


def run() -> None:
    sys.exit(main())
