"""
generate: write bundled or random models in the model file format
"""

import argparse

from ..bench.generators import gen_mn, gen_random_fts, gen_vending_machine
from ..models.model_io import format_model
from ..utils.errors import InvalidArgumentError
from .common import emit


def register(subparsers, parents) -> None:
    parser = subparsers.add_parser(
        "generate",
        parents=parents,
        help="Write the vending machine, M_n or a seeded random model",
    )
    parser.add_argument("kind", choices=("vending", "mn", "random"))
    parser.add_argument("n", type=int, nargs="?", help="Depth of M_n")
    parser.add_argument("--seed", type=int, default=0, help="Seed for random models")
    parser.add_argument("--states", type=int, default=4, help="State count for random models")
    parser.add_argument("--features", type=int, default=2, help="Feature count for random models")
    parser.add_argument("--output", "-o", help="Model file to write; stdout if omitted")
    parser.set_defaults(func=run)


def run(args: argparse.Namespace) -> int:
    if args.kind == "vending":
        fts = gen_vending_machine()
    elif args.kind == "mn":
        if args.n is None:
            raise InvalidArgumentError("generate mn needs the depth n")
        fts = gen_mn(args.n)
    else:
        fts = gen_random_fts(args.seed, args.states, args.features)
    emit(format_model(fts), args.output)
    return 0
