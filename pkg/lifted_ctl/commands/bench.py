"""
bench: call and time table over the bundled model families
"""

import argparse

from ..services.bench_service import default_cases, format_csv, format_table, run_bench
from ..utils.config import BENCH_REPEAT
from .common import emit


def register(subparsers, parents) -> None:
    parser = subparsers.add_parser(
        "bench",
        parents=parents,
        help="Run verify over M_n and the vending machine",
    )
    parser.add_argument("--sizes", type=int, nargs="*", default=[2, 7, 10], help="Values of n for M_n")
    parser.add_argument("--repeat", type=int, default=BENCH_REPEAT, help="Runs per row; the median time is reported")
    parser.add_argument("--compare-reuse", action="store_true", help="Also run every row without reuse")
    parser.add_argument("--csv", action="store_true", help="Emit CSV instead of an aligned table")
    parser.add_argument("--output", "-o", help="Write the table to a file instead of stdout")
    parser.set_defaults(func=run)


def run(args: argparse.Namespace) -> int:
    rows = run_bench(default_cases(args.sizes), repeat=args.repeat, compare_reuse=args.compare_reuse)
    emit(format_csv(rows) if args.csv else format_table(rows), args.output)
    return 0
