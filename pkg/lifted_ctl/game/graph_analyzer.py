"""
Game Graph Analyzer
Partitions a game-graph into its may-maximal strongly connected components
"""

import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

import networkx as nx

from ..utils.errors import MalformedGameError
from .graph_builder import GameGraph

logger = logging.getLogger('lifted_ctl.game')


@dataclass(frozen=True)
class Component:
    """
    One may-MSCC. nodes are sorted by discovery index; witness is the
    formula id of the unique Until/Release formula of a non-trivial
    component.
    """
    position: int
    nodes: Tuple[int, ...]
    nontrivial: bool
    witness: Optional[int] = None


@dataclass
class MsccPartition:
    """Components ordered so that every edge leads to the same or an earlier component"""
    components: List[Component]
    component_of: List[int]

    def __len__(self) -> int:
        return len(self.components)

    def __iter__(self):
        return iter(self.components)


class GraphAnalyzer:
    """
    Decomposes a game-graph into may-MSCCs
    """

    def __init__(self, graph: GameGraph):
        self.graph = graph
        self.digraph = self._build_adjacency()

    def _build_adjacency(self) -> nx.DiGraph:
        """Directed graph over auxiliary and may progress edges (must edges are may edges too)"""
        digraph = nx.DiGraph()
        digraph.add_nodes_from(range(len(self.graph.nodes)))
        for edge in self.graph.edges:
            digraph.add_edge(edge.source, edge.target)
        return digraph

    def decompose(self) -> MsccPartition:
        """
        Compute the ordered component partition

        Components are emitted in reverse topological order of the
        condensation, ties broken by the smallest member index.

        Returns:
            MsccPartition

        Raises:
            MalformedGameError: If a non-trivial component has no or
                several Until/Release formulas
        """
        graph = self.graph
        sccs = [sorted(scc) for scc in nx.strongly_connected_components(self.digraph)]
        condensation = nx.condensation(self.digraph, scc=[set(scc) for scc in sccs])
        smallest = {c: sccs[c][0] for c in condensation.nodes}

        # Successors first: sort the reversed condensation topologically
        order = list(nx.lexicographical_topological_sort(
            condensation.reverse(copy=False), key=lambda c: smallest[c]
        ))

        components: List[Component] = []
        component_of = [0] * len(graph.nodes)
        for position, c in enumerate(order):
            members = tuple(sccs[c])
            nontrivial = len(members) > 1 or self.digraph.has_edge(members[0], members[0])
            witness = self._witness(members) if nontrivial else None
            components.append(Component(position, members, nontrivial, witness))
            for n in members:
                component_of[n] = position

        logger.debug(
            "Game graph decomposed",
            extra={
                'components': len(components),
                'nontrivial': sum(1 for c in components if c.nontrivial),
            }
        )
        return MsccPartition(components, component_of)

    def _witness(self, members: Tuple[int, ...]) -> int:
        closure = self.graph.closure
        fixpoints = sorted({
            self.graph.nodes[n].formula
            for n in members
            if closure.shapes[self.graph.nodes[n].formula].is_fixpoint
        })
        if len(fixpoints) != 1:
            labels = [closure.label(f) for f in fixpoints]
            raise MalformedGameError(
                f"Component of {len(members)} nodes has {len(fixpoints)} Until/Release formulas: {labels}"
            )
        return fixpoints[0]

    def check_order(self, partition: MsccPartition) -> bool:
        """True when every edge targets the same or an earlier component"""
        component_of: Dict[int, int] = dict(enumerate(partition.component_of))
        return all(
            component_of[edge.target] <= component_of[edge.source]
            for edge in self.graph.edges
        )


def decompose(graph: GameGraph) -> MsccPartition:
    return GraphAnalyzer(graph).decompose()
