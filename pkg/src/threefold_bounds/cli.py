"""Command-line front end.

Exit codes: 0 success, 1 parse or flag error, 2 data inconsistency,
3 verification failure.
"""

from __future__ import annotations

import argparse
import csv
import os
import sys
from fractions import Fraction
from pathlib import Path

from .basket import cartier_index
from .bounds import DEFAULT_M_RANGE, DISTINGUISH_FLOOR, RestrictionBound, XiProblem, optimize_xi, prop_k1_bound
from .cases import fmt
from .document import DocumentError, load_document, parse_rational
from .fixtures import FIXTURES
from .riemann_roch import DEFAULT_DELTA_SEARCH_LIMIT, DataError, delta_index, plurigenus_table, solve_k3
from .verify import run_verification

EXIT_OK, EXIT_PARSE, EXIT_DATA, EXIT_VERIFY = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_PARSE, f"{self.prog}: error: {message}\n")


def _positive_rational(text: str) -> Fraction:
    try:
        value = parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))
    if value <= 0:
        raise argparse.ArgumentTypeError(f"must be positive, got {text}")
    return value


def _rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _load(args):
    if getattr(args, "fixture", None):
        return FIXTURES[args.fixture]()
    if not args.file:
        raise DocumentError("an input file or --fixture is required")
    return load_document(args.file)


def _color(text: str, code: str, stream) -> str:
    if os.environ.get("NO_COLOR") or not stream.isatty():
        return text
    return f"\033[{code}m{text}\033[0m"


def cmd_plurigenera(args) -> int:
    rows = plurigenus_table(_load(args), args.max_m)
    print("m P_m")
    for m, p in rows:
        print(f"{m} {p}")
    if args.csv:
        with open(args.csv, "w", newline="", encoding="utf-8") as fh:
            writer = csv.writer(fh)
            writer.writerow(["m", "P_m"])
            writer.writerows(rows)
    return EXIT_OK


def cmd_delta(args) -> int:
    print(delta_index(_load(args), args.search_limit))
    return EXIT_OK


def cmd_k3(args) -> int:
    data = _load(args)
    print(fmt(data.k3 if not data.known_plurigenera else solve_k3(data)))
    return EXIT_OK


def cmd_cartier_index(args) -> int:
    print(cartier_index(_load(args).basket))
    return EXIT_OK


def cmd_bound(args) -> int:
    print(prop_k1_bound(RestrictionBound(args.l2, args.beta_tilde, args.floor)))
    return EXIT_OK


def cmd_xi_optimize(args) -> int:
    if args.deg_kc < 0:
        raise argparse.ArgumentTypeError("--deg-kc must be non-negative")
    p = XiProblem(args.deg_kc, args.m0_over_a, args.beta, args.even)
    print(fmt(optimize_xi(p, tuple(args.m_range))))
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.paper:
        data = FIXTURES["delta18"]()
    else:
        data = _load(args)
    run = run_verification(data)
    out = sys.stdout
    for c in run.checks:
        tag = _color("PASS", "32", out) if c.passed else _color("FAIL", "31", out)
        print(f"{tag}  {c.name}: {c.detail}  [{c.anchor}]")
    if args.emit_certificates:
        target = Path(args.emit_certificates)
        target.mkdir(parents=True, exist_ok=True)
        for report in run.reports:
            (target / f"{report.scenario_id.value}.txt").write_text(report.to_certificate(), encoding="utf-8")
    if run.ok:
        print("r_3 <= 57")
        return EXIT_OK
    print(f"{len(run.failures)} check(s) failed: " + ", ".join(c.name for c in run.failures), file=sys.stderr)
    return EXIT_VERIFY


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="threefold-bounds", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def with_input(p):
        p.add_argument("file", nargs="?", help="key = value threefold document")
        p.add_argument("--fixture", choices=sorted(FIXTURES), help="use a built-in record instead of a file")
        return p

    p = with_input(sub.add_parser("plurigenera", help="table of P_m"))
    p.add_argument("--max-m", type=int, default=36)
    p.add_argument("--csv", help="also write the table as CSV")
    p.set_defaults(func=cmd_plurigenera)

    p = with_input(sub.add_parser("delta", help="ps-index: least m with P_m >= 2"))
    p.add_argument("--search-limit", type=int, default=DEFAULT_DELTA_SEARCH_LIMIT)
    p.set_defaults(func=cmd_delta)

    p = with_input(sub.add_parser("k3", help="K^3, solved from plurigenus constraints when given"))
    p.set_defaults(func=cmd_k3)

    p = with_input(sub.add_parser("cartier-index", help="lcm of the basket indices"))
    p.set_defaults(func=cmd_cartier_index)

    p = sub.add_parser("bound", help="birationality bound from L^2 and beta~")
    p.add_argument("--l2", type=_positive_rational, required=True)
    p.add_argument("--beta-tilde", type=_positive_rational, required=True)
    p.add_argument("--floor", type=int, default=DISTINGUISH_FLOOR)
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("xi-optimize", help="fixed-point lower bound for xi")
    p.add_argument("--deg-kc", type=int, required=True)
    p.add_argument("--m0-over-a", type=_rational, required=True)
    p.add_argument("--beta", type=_positive_rational, required=True)
    p.add_argument("--even", action="store_true", help="C is an even divisor")
    p.add_argument("--m-range", type=int, nargs=2, default=list(DEFAULT_M_RANGE), metavar=("LO", "HI"))
    p.set_defaults(func=cmd_xi_optimize)

    p = with_input(sub.add_parser("verify", help="replay the full delta = 18 argument"))
    p.add_argument("--paper", action="store_true", help="use the built-in delta18 record")
    p.add_argument("--emit-certificates", metavar="DIR", help="write one certificate per scenario")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code
    try:
        return args.func(args)
    except (DocumentError, argparse.ArgumentTypeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except DataError as exc:
        print(f"data error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
