"""
Game module for the lifted CTL checker
3-valued model-checking games: construction, decomposition, coloring and failure analysis
"""

from .graph_builder import GameEdge, GameGraph, GameNode, GraphBuilder, build_game_graph
from .graph_analyzer import GraphAnalyzer, MsccPartition, decompose
from .coloring import Color, Coloring, ThreeValued, color_graph, evaluate_result
from .failure import Failure, find_failure
from .reuse import ReuseStore
from .engine import GameResult, solve_game
from .dot_export import export_dot

__all__ = [
    "GameEdge",
    "GameGraph",
    "GameNode",
    "GraphBuilder",
    "build_game_graph",
    "GraphAnalyzer",
    "MsccPartition",
    "decompose",
    "Color",
    "Coloring",
    "ThreeValued",
    "color_graph",
    "evaluate_result",
    "Failure",
    "find_failure",
    "ReuseStore",
    "GameResult",
    "solve_game",
    "export_dot",
]
