"""
Failure analysis of an indefinite game

A failure node is a node colored ? none of whose children was colored ?
when it got its color. Its failure reason is a may-not-must progress edge
that kept it from a definite color: a child already refuting it (F under
a universal next, T under an existential next) or, failing that, a child
that ended up ?.
"""

import logging
from dataclasses import dataclass
from typing import List, Optional

from ..utils.errors import InvariantViolation
from .coloring import Color, Coloring
from .graph_builder import GameEdge, GameGraph, NodeKind

logger = logging.getLogger('lifted_ctl.game')


@dataclass(frozen=True)
class Failure:
    node: int
    edge: GameEdge

    def describe(self, graph: GameGraph) -> str:
        return graph.describe_edge(self.edge)


def is_failure_node(graph: GameGraph, coloring: Coloring, n: int) -> bool:
    if coloring.colors[n] is not Color.UNKNOWN:
        return False
    stamp = coloring.timestamps[n]
    return not any(
        coloring.colors[c] is Color.UNKNOWN and coloring.timestamps[c] < stamp
        for c in graph.children(n)
    )


def failure_reason(graph: GameGraph, coloring: Coloring, n: int) -> Optional[GameEdge]:
    """The reason edge of failure node n, or None if it has no may-not-must edge"""
    kind = graph.nodes[n].kind
    if kind not in (NodeKind.ANEXT, NodeKind.ENEXT):
        return None
    refuting = Color.FALSE if kind is NodeKind.ANEXT else Color.TRUE
    stamp = coloring.timestamps[n]
    candidates = [e for e in graph.outgoing(n) if e.is_may_not_must]

    def earliest(edges: List[GameEdge]) -> Optional[GameEdge]:
        if not edges:
            return None
        return min(edges, key=lambda e: coloring.timestamps[e.target])

    for pool in (
        [e for e in candidates if coloring.colors[e.target] is refuting and coloring.timestamps[e.target] < stamp],
        [e for e in candidates if coloring.colors[e.target] is Color.UNKNOWN],
        [e for e in candidates if coloring.colors[e.target] is refuting],
    ):
        edge = earliest(pool)
        if edge is not None:
            return edge
    return None


def failure_nodes(graph: GameGraph, coloring: Coloring) -> List[int]:
    return [n for n in range(len(graph.nodes)) if is_failure_node(graph, coloring, n)]


def find_failure(graph: GameGraph, coloring: Coloring) -> Failure:
    """
    Pick the failure node with the smallest discovery index that has a
    failure reason.

    Raises:
        InvariantViolation: If the graph has no failure node
    """
    for n in failure_nodes(graph, coloring):
        edge = failure_reason(graph, coloring, n)
        if edge is not None:
            logger.debug(
                "Failure node found",
                extra={'node': graph.describe_node(n), 'edge': graph.describe_edge(edge)}
            )
            return Failure(n, edge)
    raise InvariantViolation("Indefinite game without a failure node")
