"""
Three-valued coloring of a decomposed game-graph

Components are colored bottom-up. Phase 1 applies the local rules until
none fires. If a component is left partly uncolored, Phase 2a colors with
? every node for which the witness' losing option is no longer possible,
and Phase 2b colors the rest F (Until witness) or T (Release witness).
Every assignment gets a timestamp from one global clock.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import TYPE_CHECKING, Callable, Iterable, List, Optional

from ..logic.ctl import Lit, Shape
from ..utils.errors import InvariantViolation
from .graph_analyzer import Component, MsccPartition
from .graph_builder import EdgeFlavor, GameGraph, NodeKind

if TYPE_CHECKING:
    from .reuse import ReuseStore

logger = logging.getLogger('lifted_ctl.game')


class Color(str, Enum):
    TRUE = "T"
    FALSE = "F"
    UNKNOWN = "?"

    @property
    def definite(self) -> bool:
        return self is not Color.UNKNOWN


class ThreeValued(str, Enum):
    """Outcome of one abstract check"""
    TT = "tt"
    FF = "ff"
    INDEFINITE = "indefinite"


class Phase(str, Enum):
    REUSED = "reused"
    LOCAL = "phase1"
    UNDECIDED = "phase2a"
    DEFAULT = "phase2b"


_DEFINITE_OK = (Color.TRUE, Color.UNKNOWN)
_REFUTE_OK = (Color.FALSE, Color.UNKNOWN)


@dataclass
class Coloring:
    """Color, timestamp and coloring phase per node"""
    colors: List[Optional[Color]]
    timestamps: List[int]
    phases: List[Optional[Phase]]
    clock: int = 0

    @classmethod
    def empty(cls, size: int) -> "Coloring":
        return cls([None] * size, [-1] * size, [None] * size)

    def assign(self, index: int, color: Color, phase: Phase) -> None:
        if self.colors[index] is not None:
            raise InvariantViolation(f"Node {index} colored twice")
        self.clock += 1
        self.colors[index] = color
        self.timestamps[index] = self.clock
        self.phases[index] = phase

    def color(self, index: int) -> Color:
        color = self.colors[index]
        if color is None:
            raise InvariantViolation(f"Node {index} is uncolored")
        return color

    def is_total(self) -> bool:
        return all(c is not None for c in self.colors)


class GraphColorer:
    """
    Colors a game-graph component by component.

    Worklists are stacks seeded with the uncolored members in ascending
    discovery order; coloring a node pushes its uncolored predecessors in
    the same component.
    """

    def __init__(self, graph: GameGraph, partition: MsccPartition, reuse: Optional["ReuseStore"] = None):
        self.graph = graph
        self.partition = partition
        self.reuse = reuse
        self.coloring = Coloring.empty(len(graph.nodes))

    def color(self) -> Coloring:
        self._color_reused()
        for component in self.partition:
            self._color_component(component)
        if not self.coloring.is_total():
            raise InvariantViolation("Coloring is not total")
        return self.coloring

    def _color_reused(self) -> None:
        for node in self.graph.nodes:
            if node.reused:
                self.coloring.assign(node.index, self.reuse[(node.state, node.formula)], Phase.REUSED)

    def _color_component(self, component: Component) -> None:
        self._run(component, self._local_rule, Phase.LOCAL)
        remaining = [n for n in component.nodes if self.coloring.colors[n] is None]
        if not remaining:
            return
        if component.witness is None:
            raise InvariantViolation(f"Trivial component {component.position} left uncolored")

        until = self.graph.closure.shapes[component.witness] in (Shape.AU, Shape.EU)
        undecided = self._undecided_until if until else self._undecided_release
        self._run(component, undecided, Phase.UNDECIDED)

        default = Color.FALSE if until else Color.TRUE
        for n in component.nodes:
            if self.coloring.colors[n] is None:
                self.coloring.assign(n, default, Phase.DEFAULT)

        logger.debug(
            "Component colored by default",
            extra={
                'component': component.position,
                'witness': self.graph.closure.label(component.witness),
                'size': len(component.nodes),
            }
        )

    def _run(self, component: Component, rule: Callable[[int], Optional[Color]], phase: Phase) -> None:
        colors = self.coloring.colors
        position = component.position
        component_of = self.partition.component_of
        stack = [n for n in component.nodes if colors[n] is None]
        while stack:
            n = stack.pop()
            if colors[n] is not None:
                continue
            color = rule(n)
            if color is None:
                continue
            self.coloring.assign(n, color, phase)
            for p in self.graph.predecessors(n):
                if colors[p] is None and component_of[p] == position:
                    stack.append(p)

    # Child views

    def _colors(self, targets: Iterable[int]) -> List[Optional[Color]]:
        colors = self.coloring.colors
        return [colors[t] for t in targets]

    def _progress(self, n: int):
        """(may-children colors, must-children colors)"""
        colors = self.coloring.colors
        may, must = [], []
        for edge in self.graph.outgoing(n):
            color = colors[edge.target]
            may.append(color)
            if edge.flavor is EdgeFlavor.PROGRESS_MUST:
                must.append(color)
        return may, must

    # Phase 1

    def _terminal_color(self, n: int) -> Color:
        node = self.graph.nodes[n]
        closure = self.graph.closure
        shape = closure.shapes[node.formula]
        if shape is Shape.TRUE:
            return Color.TRUE
        if shape is Shape.FALSE:
            return Color.FALSE
        lit = closure.formula(node.formula)
        assert isinstance(lit, Lit)
        holds = self.graph.mts.core.holds(node.state, lit.prop)
        return Color.TRUE if holds == lit.positive else Color.FALSE

    def _local_rule(self, n: int) -> Optional[Color]:
        kind = self.graph.nodes[n].kind
        if kind is NodeKind.TERMINAL:
            return self._terminal_color(n)
        if kind is NodeKind.AND:
            return _conjunction(self._colors(self.graph.children(n)))
        if kind is NodeKind.OR:
            return _disjunction(self._colors(self.graph.children(n)))
        may, must = self._progress(n)
        if kind is NodeKind.ANEXT:
            if all(c is Color.TRUE for c in may):
                return Color.TRUE
            if any(c is Color.FALSE for c in must):
                return Color.FALSE
            if all(c in _DEFINITE_OK for c in must) and any(c in _REFUTE_OK for c in may):
                return Color.UNKNOWN
            return None
        # ENEXT
        if all(c is Color.FALSE for c in may):
            return Color.FALSE
        if any(c is Color.TRUE for c in must):
            return Color.TRUE
        if all(c in _REFUTE_OK for c in must) and any(c in _DEFINITE_OK for c in may):
            return Color.UNKNOWN
        return None

    # Phase 2a

    def _undecided_until(self, n: int) -> Optional[Color]:
        """? when the node can no longer be forced to F"""
        kind = self.graph.nodes[n].kind
        if kind is NodeKind.ANEXT:
            _, must = self._progress(n)
            ok = all(c in _DEFINITE_OK for c in must)
        elif kind is NodeKind.ENEXT:
            may, _ = self._progress(n)
            ok = any(c in _DEFINITE_OK for c in may)
        elif kind is NodeKind.AND:
            ok = all(c in _DEFINITE_OK for c in self._colors(self.graph.children(n)))
        elif kind is NodeKind.OR:
            ok = any(c in _DEFINITE_OK for c in self._colors(self.graph.children(n)))
        else:
            ok = False
        return Color.UNKNOWN if ok else None

    def _undecided_release(self, n: int) -> Optional[Color]:
        """? when the node can no longer be forced to T"""
        kind = self.graph.nodes[n].kind
        if kind is NodeKind.ANEXT:
            may, _ = self._progress(n)
            ok = any(c in _REFUTE_OK for c in may)
        elif kind is NodeKind.ENEXT:
            _, must = self._progress(n)
            ok = all(c in _REFUTE_OK for c in must)
        elif kind is NodeKind.AND:
            ok = any(c in _REFUTE_OK for c in self._colors(self.graph.children(n)))
        elif kind is NodeKind.OR:
            ok = all(c in _REFUTE_OK for c in self._colors(self.graph.children(n)))
        else:
            ok = False
        return Color.UNKNOWN if ok else None


def _conjunction(children: List[Optional[Color]]) -> Optional[Color]:
    if any(c is Color.FALSE for c in children):
        return Color.FALSE
    if all(c is Color.TRUE for c in children):
        return Color.TRUE
    if all(c in _DEFINITE_OK for c in children):
        return Color.UNKNOWN
    return None


def _disjunction(children: List[Optional[Color]]) -> Optional[Color]:
    if any(c is Color.TRUE for c in children):
        return Color.TRUE
    if all(c is Color.FALSE for c in children):
        return Color.FALSE
    if all(c in _REFUTE_OK for c in children):
        return Color.UNKNOWN
    return None


def color_graph(graph: GameGraph, partition: MsccPartition, reuse: Optional["ReuseStore"] = None) -> Coloring:
    """Total, timestamped coloring of graph"""
    return GraphColorer(graph, partition, reuse).color()


def evaluate_result(graph: GameGraph, coloring: Coloring) -> ThreeValued:
    """tt if every initial node is T, ff if some is F, indefinite otherwise"""
    colors = [coloring.color(n) for n in graph.initial_nodes]
    if any(c is Color.FALSE for c in colors):
        return ThreeValued.FF
    if all(c is Color.TRUE for c in colors):
        return ThreeValued.TT
    return ThreeValued.INDEFINITE
