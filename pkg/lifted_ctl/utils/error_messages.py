"""
User-friendly error messages for the command-line surface
"""

from typing import Optional


def get_formula_error(text: str, position: int, reason: str) -> str:
    """Generate error message for a formula that does not parse"""
    caret = " " * position + "^"
    return f"""
Formula Syntax Error
{'='*60}

  {text}
  {caret}
{reason}

Formulas use: true false ident !f f&g f|g A[f U g] E[f V g]
              AX EX AF EF AG EG, with & binding tighter than |.
Example: A[!r U r]

{'='*60}
"""


def get_model_error(path: str, reason: str, line: Optional[int] = None) -> str:
    """Generate error message for a model file that cannot be loaded"""
    location = f"{path}:{line}" if line is not None else path
    return f"""
Model Error
{'='*60}

Location: {location}
{reason}

Model files are sequences of ';'-terminated statements:
  features: c f;
  configs: all;            (or one symbol per feature: letter or 1 = present, - or 0 = absent: -- c- -f cf;)
  states: s0* s1 s2;       ('*' marks initial states)
  labels: s2: r;
  trans: s0 -pay[!f]-> s1; s1 -drink-> s2;

{'='*60}
"""


def get_io_error(path: str, reason: str) -> str:
    """Generate error for unreadable or unwritable paths"""
    return f"""
I/O Error
{'='*60}

Path: {path}
{reason}

{'='*60}
"""


def get_internal_error(error_type: str, details: str = "") -> str:
    """Generate error for broken internal invariants"""
    return f"""
Internal Error
{'='*60}

Error Type: {error_type}

Details: {details}

This indicates a defect in the checker rather than in the input.
Re-run with --log-level DEBUG for the full trace.

{'='*60}
"""
