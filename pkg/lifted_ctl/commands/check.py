"""
check: lifted verification of one formula against a model
"""

import argparse
import logging
from pathlib import Path

from ..services.report_schemas import build_check_report, render_check_text
from ..services.verify_service import VerifyOptions, verify
from ..utils.config import DEFAULT_REUSE
from .common import emit, exit_status, load_inputs

logger = logging.getLogger('lifted_ctl.cli')


def register(subparsers, parents) -> None:
    parser = subparsers.add_parser(
        "check",
        parents=parents,
        help="Verify a formula for every configuration of a model",
    )
    parser.add_argument("model", help="Model file")
    parser.add_argument("formula", help="CTL formula, e.g. 'A[!r U r]'")
    parser.add_argument("--no-reuse", dest="reuse", action="store_false", default=DEFAULT_REUSE,
                        help="Rebuild every refined game from scratch")
    parser.add_argument("--check-reuse", action="store_true",
                        help="Recompute reused colors and fail on a mismatch")
    parser.add_argument("--dot-dir", type=Path, help="Write one colored game-graph per engine call")
    parser.add_argument("--stats", action="store_true", help="Include wall-clock timing in the stats")
    parser.add_argument("--trace", action="store_true", help="List every engine call of the refinement")
    parser.add_argument("--report", choices=("text", "structured"), default="text")
    parser.add_argument("--output", "-o", help="Write the report to a file instead of stdout")
    parser.set_defaults(func=run)


def run(args: argparse.Namespace) -> int:
    fts, phi = load_inputs(args.model, args.formula)
    options = VerifyOptions(reuse=args.reuse, check_reuse=args.check_reuse, dot_dir=args.dot_dir)
    if args.dot_dir is not None:
        logger.info("Writing game graphs", extra={'dir': str(args.dot_dir)})
    report = verify(fts, phi, options=options)

    schema = build_check_report(report, timing=args.stats, trace=args.trace)
    if args.report == "structured":
        emit(schema.model_dump_json(indent=2) + "\n", args.output)
    else:
        emit(render_check_text(schema), args.output)
    return exit_status(report.all_satisfied)
