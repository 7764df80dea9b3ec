"""
oracle: brute-force verdict per configuration
"""

import argparse

from ..models.transition_systems import project_to_config
from ..services.oracle_service import lifted_check_brute, satisfying_states
from ..services.report_schemas import build_oracle_report, render_oracle_text
from .common import emit, exit_status, load_inputs


def register(subparsers, parents) -> None:
    parser = subparsers.add_parser(
        "oracle",
        parents=parents,
        help="Check every configuration separately by fixpoint labeling",
    )
    parser.add_argument("model", help="Model file")
    parser.add_argument("formula", help="CTL formula")
    parser.add_argument("--states", action="store_true", help="Also list the satisfying states per configuration")
    parser.add_argument("--report", choices=("text", "structured"), default="text")
    parser.add_argument("--output", "-o", help="Write the table to a file instead of stdout")
    parser.set_defaults(func=run)


def run(args: argparse.Namespace) -> int:
    fts, phi = load_inputs(args.model, args.formula)
    verdicts = lifted_check_brute(fts, phi)

    states = None
    if args.states:
        names = fts.core.state_names
        states = {
            fts.space.describe(k): [names[s] for s in sorted(satisfying_states(project_to_config(fts, k), phi))]
            for k in fts.space
        }

    report = build_oracle_report(args.formula, fts.space, verdicts, states)
    if args.report == "structured":
        emit(report.model_dump_json(indent=2) + "\n", args.output)
    else:
        emit(render_oracle_text(report), args.output)
    return exit_status(all(verdicts.values()))
