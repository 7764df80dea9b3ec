"""
Game Graph Builder for the 3-valued model-checking game
Constructs the game-graph of an MTS and a CTL formula
"""

import logging
from collections import defaultdict, deque
from dataclasses import dataclass
from enum import Enum
from typing import TYPE_CHECKING, Any, Dict, List, Optional, Tuple

from ..logic.ctl import Closure, Shape
from ..models.transition_systems import Mts, Transition

if TYPE_CHECKING:
    from .reuse import ReuseStore

logger = logging.getLogger('lifted_ctl.game')


class NodeKind(str, Enum):
    """Role of a game node, fixed by the top connective of its formula"""
    TERMINAL = "terminal"
    AND = "and"
    OR = "or"
    ANEXT = "anext"
    ENEXT = "enext"


class EdgeFlavor(str, Enum):
    AUXILIARY = "auxiliary"
    PROGRESS_MAY = "may"
    PROGRESS_MUST = "must"


# Until nodes behave like disjunctions, Release nodes like conjunctions
_KIND_OF_SHAPE = {
    Shape.TRUE: NodeKind.TERMINAL,
    Shape.FALSE: NodeKind.TERMINAL,
    Shape.LIT: NodeKind.TERMINAL,
    Shape.AND: NodeKind.AND,
    Shape.OR: NodeKind.OR,
    Shape.AU: NodeKind.OR,
    Shape.EU: NodeKind.OR,
    Shape.AV: NodeKind.AND,
    Shape.EV: NodeKind.AND,
    Shape.AX: NodeKind.ANEXT,
    Shape.EX: NodeKind.ENEXT,
}


def node_kind(shape: Shape) -> NodeKind:
    return _KIND_OF_SHAPE[shape]


@dataclass(frozen=True)
class GameNode:
    """A game configuration (state, formula); index is the BFS discovery order"""
    index: int
    state: int
    formula: int
    kind: NodeKind
    reused: bool = False


@dataclass(frozen=True)
class GameEdge:
    source: int
    target: int
    flavor: EdgeFlavor
    transition: Optional[Transition] = None

    @property
    def is_progress(self) -> bool:
        return self.flavor is not EdgeFlavor.AUXILIARY

    @property
    def is_may_not_must(self) -> bool:
        return self.flavor is EdgeFlavor.PROGRESS_MAY


class GameGraph:
    """
    The game-graph reachable from I x {phi}.

    Nodes and edges are stored in discovery order; out_edges and in_edges
    hold edge indices per node.
    """

    def __init__(self, mts: Mts, closure: Closure):
        self.mts = mts
        self.closure = closure
        self.nodes: List[GameNode] = []
        self.edges: List[GameEdge] = []
        self.node_index: Dict[Tuple[int, int], int] = {}  # (state, formula) -> node
        self.out_edges: List[List[int]] = []
        self.in_edges: List[List[int]] = []
        self.initial_nodes: List[int] = []

    def __len__(self) -> int:
        return len(self.nodes)

    def node(self, state: int, formula: int) -> GameNode:
        return self.nodes[self.node_index[(state, formula)]]

    def find(self, state: int, formula: int) -> Optional[GameNode]:
        index = self.node_index.get((state, formula))
        return None if index is None else self.nodes[index]

    def children(self, index: int) -> List[int]:
        return [self.edges[e].target for e in self.out_edges[index]]

    def outgoing(self, index: int) -> List[GameEdge]:
        return [self.edges[e] for e in self.out_edges[index]]

    def predecessors(self, index: int) -> List[int]:
        return sorted({self.edges[e].source for e in self.in_edges[index]})

    def describe_node(self, index: int) -> str:
        node = self.nodes[index]
        state = self.mts.core.state_names[node.state]
        return f"({state}, {self.closure.label(node.formula)})"

    def describe_edge(self, edge: GameEdge) -> str:
        text = f"{self.describe_node(edge.source)} -> {self.describe_node(edge.target)}"
        if edge.transition is not None:
            text += f" via {self.mts.core.action_names[edge.transition.action]}"
        return text

    @property
    def reused_count(self) -> int:
        return sum(1 for node in self.nodes if node.reused)

    def stats(self) -> Dict[str, Any]:
        """Calculate graph statistics"""
        node_kinds: Dict[str, int] = defaultdict(int)
        edge_flavors: Dict[str, int] = defaultdict(int)

        for node in self.nodes:
            node_kinds[node.kind.value] += 1

        for edge in self.edges:
            edge_flavors[edge.flavor.value] += 1

        return {
            "total_nodes": len(self.nodes),
            "total_edges": len(self.edges),
            "reused_nodes": self.reused_count,
            "node_kinds": dict(node_kinds),
            "edge_flavors": dict(edge_flavors),
        }


class GraphBuilder:
    """
    Builds the game-graph breadth-first from the initial configurations.

    Terminals stop; boolean nodes get one auxiliary edge per operand;
    Until/Release nodes get one auxiliary edge to their expansion; next
    nodes get one progress edge per may transition, flagged must when the
    transition is also a must transition. Nodes found in the reuse store
    become terminals.
    """

    def __init__(self, mts: Mts, closure: Closure, reuse: Optional["ReuseStore"] = None):
        self.mts = mts
        self.closure = closure
        self.reuse = reuse if reuse is not None else {}
        self.graph = GameGraph(mts, closure)
        self._queue: deque = deque()

    def build(self) -> GameGraph:
        """
        Build the complete game-graph

        Returns:
            GameGraph with nodes in BFS discovery order
        """
        root = self.closure.id_of(self.closure.root)
        for state in sorted(self.mts.core.initial):
            index = self._add_node(state, root)
            if index not in self.graph.initial_nodes:
                self.graph.initial_nodes.append(index)

        while self._queue:
            self._expand(self._queue.popleft())

        logger.debug("Game graph built", extra=self.graph.stats())
        return self.graph

    def _add_node(self, state: int, formula: int) -> int:
        graph = self.graph
        key = (state, formula)
        if key in graph.node_index:
            return graph.node_index[key]

        reused = key in self.reuse and self.closure.shapes[formula] not in (Shape.TRUE, Shape.FALSE, Shape.LIT)
        kind = NodeKind.TERMINAL if reused else node_kind(self.closure.shapes[formula])
        index = len(graph.nodes)
        graph.nodes.append(GameNode(index, state, formula, kind, reused))
        graph.node_index[key] = index
        graph.out_edges.append([])
        graph.in_edges.append([])
        if kind is not NodeKind.TERMINAL:
            self._queue.append(index)
        return index

    def _add_edge(self, source: int, target: int, flavor: EdgeFlavor, transition: Optional[Transition] = None):
        graph = self.graph
        graph.edges.append(GameEdge(source, target, flavor, transition))
        edge_index = len(graph.edges) - 1
        graph.out_edges[source].append(edge_index)
        graph.in_edges[target].append(edge_index)

    def _expand(self, index: int):
        node = self.graph.nodes[index]
        successors = self.closure.successors[node.formula]

        if node.kind in (NodeKind.ANEXT, NodeKind.ENEXT):
            (operand,) = successors
            for t in self.mts.core.outgoing[node.state]:
                flavor = EdgeFlavor.PROGRESS_MUST if self.mts.is_must(t) else EdgeFlavor.PROGRESS_MAY
                child = self._add_node(t.target, operand)
                self._add_edge(index, child, flavor, t)
            return

        for formula in successors:
            child = self._add_node(node.state, formula)
            self._add_edge(index, child, EdgeFlavor.AUXILIARY)


def build_game_graph(mts: Mts, closure: Closure, reuse: Optional["ReuseStore"] = None) -> GameGraph:
    return GraphBuilder(mts, closure, reuse).build()
