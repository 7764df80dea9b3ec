"""
DOT export of a colored game-graph

Fill colors: green for T, red for F, white for ?. F nodes get a dashed
border; may-not-must progress edges are dashed, must and auxiliary edges
solid.
"""

import logging
from pathlib import Path
from typing import Optional, Union

import pydot

from ..utils.config import get_settings
from .coloring import Color, Coloring
from .failure import Failure
from .graph_builder import EdgeFlavor, GameGraph

logger = logging.getLogger('lifted_ctl.game')

FILL = {
    Color.TRUE: "green",
    Color.FALSE: "red",
    Color.UNKNOWN: "white",
}


def to_pydot(
    graph: GameGraph,
    coloring: Coloring,
    failure: Optional[Failure] = None,
    rankdir: Optional[str] = None
) -> pydot.Dot:
    """Build a pydot graph; nodes and edges follow discovery order"""
    dot = pydot.Dot(graph_name="game", graph_type="digraph")
    dot.set("rankdir", rankdir or get_settings().dot_rankdir)
    dot.set_node_defaults(shape="box", style="filled")

    initial = set(graph.initial_nodes)
    for node in graph.nodes:
        color = coloring.colors[node.index]
        styles = ["filled"]
        if color is Color.FALSE:
            styles.append("dashed")
        if node.index in initial:
            styles.append("bold")
        attrs = {
            "label": graph.describe_node(node.index),
            "fillcolor": FILL.get(color, "gray"),
            "style": ",".join(styles),
        }
        if failure is not None and node.index == failure.node:
            attrs["penwidth"] = "3"
        dot.add_node(pydot.Node(f"n{node.index}", **attrs))

    action_names = graph.mts.core.action_names
    for edge in graph.edges:
        attrs = {"style": "dashed" if edge.flavor is EdgeFlavor.PROGRESS_MAY else "solid"}
        if edge.transition is not None:
            attrs["label"] = action_names[edge.transition.action]
        if failure is not None and edge == failure.edge:
            attrs["color"] = "blue"
        dot.add_edge(pydot.Edge(f"n{edge.source}", f"n{edge.target}", **attrs))
    return dot


def export_dot(
    graph: GameGraph,
    coloring: Coloring,
    path: Optional[Union[str, Path]] = None,
    failure: Optional[Failure] = None,
    rankdir: Optional[str] = None
) -> str:
    """
    Render the colored graph as DOT text, writing it to path if given

    Returns:
        The DOT source
    """
    text = to_pydot(graph, coloring, failure, rankdir).to_string()
    if path is not None:
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text, encoding="utf-8")
        logger.info("Game graph written", extra={'path': str(path), 'nodes': len(graph.nodes)})
    return text
