"""
Helpers shared by the command modules
"""

import logging
import sys
from pathlib import Path
from typing import Optional, Tuple

from ..logic.ctl import StateFormula, parse_formula
from ..models.model_io import load_model
from ..models.transition_systems import Fts
from ..utils.config import EXIT_ALL_SATISFIED, EXIT_VIOLATED

logger = logging.getLogger('lifted_ctl.cli')


def load_inputs(model_path: str, formula_text: str) -> Tuple[Fts, StateFormula]:
    """Parse the formula first so that syntax errors do not wait on model loading"""
    phi = parse_formula(formula_text)
    fts = load_model(model_path)
    return fts, phi


def emit(text: str, output: Optional[str] = None) -> None:
    """Write text to output, or to stdout when no path is given"""
    if output is None:
        sys.stdout.write(text)
        return
    path = Path(output)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, encoding="utf-8")
    logger.info("Output written", extra={'path': str(path)})


def exit_status(all_satisfied: bool) -> int:
    return EXIT_ALL_SATISFIED if all_satisfied else EXIT_VIOLATED
