"""
game: colored game-graph of the join abstraction as DOT
"""

import argparse
import logging

from ..game.dot_export import export_dot
from ..game.engine import solve_game
from ..logic.ctl import Closure
from ..models.transition_systems import abstract_join
from ..utils.config import get_settings
from .common import emit, load_inputs

logger = logging.getLogger('lifted_ctl.cli')


def register(subparsers, parents) -> None:
    parser = subparsers.add_parser(
        "game",
        parents=parents,
        help="Build and color the game for the whole configuration space",
    )
    parser.add_argument("model", help="Model file")
    parser.add_argument("formula", help="CTL formula")
    parser.add_argument("--output", "-o", help="DOT file to write; stdout if omitted")
    parser.add_argument("--rankdir", choices=("TB", "LR"), help="Graph layout direction")
    parser.set_defaults(func=run)


def run(args: argparse.Namespace) -> int:
    fts, phi = load_inputs(args.model, args.formula)
    game = solve_game(abstract_join(fts), Closure(phi))
    rankdir = args.rankdir or get_settings().dot_rankdir
    text = export_dot(game.graph, game.coloring, failure=game.failure, rankdir=rankdir)
    emit(text, args.output)
    logger.info(
        "Game exported",
        extra={'result': game.result.value, 'nodes': len(game.graph.nodes), 'edges': len(game.graph.edges)}
    )
    return 0
