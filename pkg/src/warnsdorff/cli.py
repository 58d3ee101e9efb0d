"""Command-line entry point: ``warnsdorff {tour,census,verify,perm}``.

Exit codes: 0 success, 1 verification mismatch, 2 usage or validation error.
"""

from __future__ import annotations

import argparse
import logging
import sys
import time
from typing import Optional, Sequence

from . import kernel
from .board import on_board, parse_square
from .census import good_order_fraction, iter_failure_chunks, run_census
from .heuristic import TieBreakPolicy, run_tour
from .permutations import (
    MoveOrder,
    OrderError,
    base_order,
    format_order,
    parse_order,
    rank,
    reverse,
    unrank,
    unrank_indices,
)
from .report import census_report, render_grid, tour_report, write_census_csv
from .verify import run_checks

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2


class UsageError(Exception):
    pass


def _size(text: str) -> int:
    n = int(text)
    if n < 1:
        raise argparse.ArgumentTypeError("size must be >= 1")
    return n


def _order(text: str) -> MoveOrder:
    try:
        return parse_order(text)
    except OrderError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--policy", choices=[t.value for t in TieBreakPolicy], default="first",
                   help="tie-break among minimal-degree candidates (default: first)")
    p.add_argument("--size", type=_size, default=8, help="board side length (default: 8)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="warnsdorff", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("tour", help="run one tour and print its move-number grid")
    p.add_argument("--start", required=True, help="start square as 'row,col' (0-based)")
    p.add_argument("--order", type=_order, default=None,
                   help="move order as '<dx,dy> ...' (default: the canonical order)")
    _add_common(p)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--timing", action="store_true", help="include wall-clock timing")

    p = sub.add_parser("census", help="run every move order from every start")
    _add_common(p)
    p.add_argument("--workers", type=int, default=1, help="worker processes; 0 = all CPUs")
    p.add_argument("--format", choices=["text", "json", "csv"], default="text")
    p.add_argument("--histogram", action="store_true", help="print the failure histogram")
    p.add_argument("--timing", action="store_true", help="include wall-clock timing")

    p = sub.add_parser("verify", help="check every published number")
    p.add_argument("--quick", action="store_true", help="figures and named orders only")
    p.add_argument("--workers", type=int, default=1)

    p = sub.add_parser("perm", help="convert between move orders and ranks")
    psub = p.add_subparsers(dest="perm_command", required=True)
    psub.add_parser("rank", help="order text -> rank").add_argument("order", type=_order)
    psub.add_parser("unrank", help="rank -> order text").add_argument("rank", type=int)
    psub.add_parser("reverse", help="reverse an order").add_argument("order", type=_order)
    return parser


def cmd_tour(args: argparse.Namespace) -> int:
    try:
        start = parse_square(args.start)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if not on_board(start, args.size):
        raise UsageError(f"start {start} is off a {args.size}x{args.size} board")
    t0 = time.perf_counter()
    tour = run_tour(start, args.order or base_order(), TieBreakPolicy(args.policy), args.size)
    elapsed = time.perf_counter() - t0
    if args.format == "json":
        timing = {"seconds": elapsed} if args.timing else None
        sys.stdout.write(tour_report(tour, timing).to_json())
        return EXIT_OK
    sys.stdout.write(render_grid(tour))
    print(f"length: {tour.length}")
    print(f"hamiltonian: {str(tour.hamiltonian).lower()}")
    print(f"closed: {str(tour.closed).lower()}")
    print(f"final: {tour.last}")
    if args.timing:
        print(f"seconds: {elapsed:.6f}", file=sys.stderr)
    return EXIT_OK


def _print_summary(summary, histogram: bool) -> None:
    print(f"policy: {summary.policy.value}")
    print(f"size: {summary.size}")
    if summary.size != 8:
        print(f"note: extrapolation, no published reference values for n={summary.size}")
    print(f"total_orders: {summary.total_orders}")
    print(f"bad_orders: {summary.bad_orders}")
    print(f"total_tours: {summary.total_tours}")
    print(f"non_hamiltonian_tours: {summary.non_hamiltonian_tours}")
    print(f"max_failures: {summary.max_failures}")
    print(f"argmax_ranks: {' '.join(map(str, summary.argmax_ranks))}")
    good = summary.total_orders - summary.bad_orders
    print(f"good_orders: {good}/{summary.total_orders} ({float(good_order_fraction(summary)):.2%})")
    if histogram:
        print("failure_histogram:")
        for k, v in summary.failure_histogram.items():
            print(f"  {k:>2}: {v}")


def cmd_census(args: argparse.Namespace) -> int:
    policy = TieBreakPolicy(args.policy)
    t0 = time.perf_counter()
    if args.format == "csv":
        def rows():
            for lo, block in iter_failure_chunks(policy, args.size, args.workers):
                for i, f in enumerate(block):
                    yield lo + i, format_order(MoveOrder.from_indices(unrank_indices(lo + i))), f
        write_census_csv(sys.stdout, rows())
        summary = None
    else:
        summary = run_census(policy, args.size, args.workers)
    elapsed = time.perf_counter() - t0
    if args.format == "json":
        timing = {"seconds": elapsed, "workers": args.workers} if args.timing else None
        sys.stdout.write(census_report(summary, timing).to_json())
    elif args.format == "text":
        _print_summary(summary, args.histogram)
    if args.timing:
        print(f"seconds: {elapsed:.3f} (kernel: {kernel.NAME}, workers: {args.workers})", file=sys.stderr)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    checks = run_checks(quick=args.quick, workers=args.workers)
    width = max(len(c.name) for c in checks)
    failed = 0
    for c in checks:
        if c.passed:
            print(f"PASS  {c.name}")
        else:
            failed += 1
            print(f"FAIL  {c.name:<{width}}  expected {c.expected!r}, got {c.actual!r}")
    print(f"{len(checks) - failed}/{len(checks)} checks passed")
    return EXIT_OK if not failed else EXIT_MISMATCH


def cmd_perm(args: argparse.Namespace) -> int:
    if args.perm_command == "rank":
        print(rank(args.order))
    elif args.perm_command == "unrank":
        try:
            print(format_order(unrank(args.rank)))
        except OrderError as exc:
            raise UsageError(str(exc)) from None
    else:
        print(format_order(reverse(args.order)))
    return EXIT_OK


COMMANDS = {"tour": cmd_tour, "census": cmd_census, "verify": cmd_verify, "perm": cmd_perm}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
