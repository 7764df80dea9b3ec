"""
One abstract check: build, decompose, color and evaluate the game of an
MTS against a formula
"""

import logging
import time
from dataclasses import dataclass
from typing import Optional

from ..logic.ctl import Closure
from ..models.transition_systems import Mts
from .coloring import Coloring, ThreeValued, color_graph, evaluate_result
from .failure import Failure, find_failure
from .graph_analyzer import MsccPartition, decompose
from .graph_builder import GameGraph, build_game_graph
from .reuse import ReuseStore

logger = logging.getLogger('lifted_ctl.game')


@dataclass
class GameResult:
    graph: GameGraph
    partition: MsccPartition
    coloring: Coloring
    result: ThreeValued
    failure: Optional[Failure]
    elapsed_ms: float

    @property
    def nodes_built(self) -> int:
        return len(self.graph.nodes)

    @property
    def nodes_reused(self) -> int:
        return self.graph.reused_count


def solve_game(mts: Mts, closure: Closure, reuse: Optional[ReuseStore] = None) -> GameResult:
    """
    Run one engine call.

    Args:
        mts: Abstract model
        closure: Closure of the formula being checked
        reuse: Definite colors from an enclosing check; matching nodes are
            not expanded

    Returns:
        GameResult; failure is set exactly when the result is indefinite
    """
    start = time.perf_counter()
    reuse = reuse if reuse is not None else ReuseStore()
    graph = build_game_graph(mts, closure, reuse)
    partition = decompose(graph)
    coloring = color_graph(graph, partition, reuse)
    result = evaluate_result(graph, coloring)
    failure = find_failure(graph, coloring) if result is ThreeValued.INDEFINITE else None
    elapsed_ms = (time.perf_counter() - start) * 1000

    logger.debug(
        "Game solved",
        extra={
            'result': result.value,
            'nodes': len(graph.nodes),
            'reused': graph.reused_count,
            'components': len(partition),
        }
    )
    return GameResult(graph, partition, coloring, result, failure, elapsed_ms)
