"""
Definite colors carried from one abstract check to the checks of its
refined halves
"""

from typing import Dict, Iterator, Mapping, Optional, Tuple

from ..logic.ctl import Shape
from ..utils.errors import InvariantViolation
from .coloring import Color, Coloring
from .graph_builder import GameGraph

Key = Tuple[int, int]  # (state, formula)


class ReuseStore(Mapping[Key, Color]):
    """
    Immutable map (state, formula) -> T/F.

    A definite color computed for a configuration space stays valid for
    every subspace of it, so a store is only ever passed downwards.
    """

    def __init__(self, colors: Optional[Dict[Key, Color]] = None):
        self._colors: Dict[Key, Color] = dict(colors or {})
        if any(not c.definite for c in self._colors.values()):
            raise InvariantViolation("Reuse store may only hold definite colors")

    def __getitem__(self, key: Key) -> Color:
        return self._colors[key]

    def __iter__(self) -> Iterator[Key]:
        return iter(self._colors)

    def __len__(self) -> int:
        return len(self._colors)

    def extended(self, graph: GameGraph, coloring: Coloring) -> "ReuseStore":
        """A new store with the definite colors of every non-literal node of graph added"""
        colors = dict(self._colors)
        shapes = graph.closure.shapes
        for node in graph.nodes:
            if node.reused or shapes[node.formula] in (Shape.TRUE, Shape.FALSE, Shape.LIT):
                continue
            color = coloring.colors[node.index]
            if color is not None and color.definite:
                colors[(node.state, node.formula)] = color
        return ReuseStore(colors)

    def mismatches(self, graph: GameGraph, coloring: Coloring):
        """Nodes of an unpruned graph whose color disagrees with the store"""
        for node in graph.nodes:
            stored = self._colors.get((node.state, node.formula))
            if stored is not None and coloring.colors[node.index] is not stored:
                yield node.index, stored, coloring.colors[node.index]
