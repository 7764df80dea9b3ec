"""
Exception types raised by the lifted CTL checker
"""

from typing import Optional


class LiftedCheckError(Exception):
    """Base class for all checker errors"""


class FeatureExprError(LiftedCheckError, ValueError):
    """Malformed feature expression or reference to an undeclared feature"""


class FormulaSyntaxError(LiftedCheckError, ValueError):
    """CTL formula text that does not parse"""

    def __init__(self, message: str, text: str = "", position: int = 0):
        super().__init__(f"{message} (at column {position + 1})")
        self.reason = message
        self.text = text
        self.position = position


class ModelError(LiftedCheckError, ValueError):
    """Problem with a model, located by file and 1-based line when known"""

    def __init__(self, message: str, line: Optional[int] = None, path: Optional[str] = None):
        where = ""
        if path:
            where = f"{path}:"
        if line is not None:
            where = f"{where}{line}:"
        super().__init__(f"{where} {message}" if where else message)
        self.reason = message
        self.line = line
        self.path = path


class ModelFormatError(ModelError):
    """Model file that does not follow the line-oriented format"""


class ModelValidationError(ModelError):
    """Structurally invalid model (no initial state, non-total relation, ...)"""


class InvalidArgumentError(LiftedCheckError, ValueError):
    """Operation called outside its precondition"""


class MalformedGameError(LiftedCheckError, RuntimeError):
    """Game-graph component that violates the single-witness property"""


class InvariantViolation(LiftedCheckError, RuntimeError):
    """Internal invariant broken; indicates a bug, not bad input"""
