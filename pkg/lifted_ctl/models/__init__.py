"""
Models module for the lifted CTL checker
Transition systems, featured transition systems and their abstractions
"""

from .transition_systems import (
    Fts,
    FtsBuilder,
    Mts,
    Transition,
    Ts,
    abstract_join,
    project_to_config,
    project_to_subspace,
    validate_fts,
)
from .model_io import format_model, load_model, parse_model, save_model

__all__ = [
    "Fts",
    "FtsBuilder",
    "Mts",
    "Transition",
    "Ts",
    "abstract_join",
    "project_to_config",
    "project_to_subspace",
    "validate_fts",
    "format_model",
    "load_model",
    "parse_model",
    "save_model",
]
