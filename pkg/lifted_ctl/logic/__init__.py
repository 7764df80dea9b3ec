"""
Logic module for the lifted CTL checker
Feature expressions over configuration spaces and CTL formulas in NNF
"""

from .featexpr import ConfigSpace, FeatExpr, Feature
from .ctl import Closure, StateFormula, format_formula, parse_formula

__all__ = [
    "ConfigSpace",
    "FeatExpr",
    "Feature",
    "Closure",
    "StateFormula",
    "format_formula",
    "parse_formula",
]
