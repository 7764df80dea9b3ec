"""
CTL formulas in negation normal form

Negation only occurs as the polarity of a literal. The parser pushes
every "!" inward with the usual dualities, so any formula it returns is
already in NNF. Closure computes sub(phi) including the four expansion
members of each Until/Release formula; it is the formula dimension of
the game board.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Dict, FrozenSet, Iterator, List, Tuple

from .lexer import TokenStream, tokenize
from ..utils.errors import FormulaSyntaxError, InvalidArgumentError


class StateFormula:
    """Base class of state formulas"""
    __slots__ = ()


class PathFormula:
    """Base class of path formulas (only under A or E)"""
    __slots__ = ()


@dataclass(frozen=True)
class CtlTrue(StateFormula):
    pass


@dataclass(frozen=True)
class CtlFalse(StateFormula):
    pass


@dataclass(frozen=True)
class Lit(StateFormula):
    prop: str
    positive: bool = True


@dataclass(frozen=True)
class And(StateFormula):
    left: StateFormula
    right: StateFormula


@dataclass(frozen=True)
class Or(StateFormula):
    left: StateFormula
    right: StateFormula


@dataclass(frozen=True)
class ForAll(StateFormula):
    path: PathFormula


@dataclass(frozen=True)
class Exists(StateFormula):
    path: PathFormula


@dataclass(frozen=True)
class Next(PathFormula):
    operand: StateFormula


@dataclass(frozen=True)
class Until(PathFormula):
    left: StateFormula
    right: StateFormula


@dataclass(frozen=True)
class Release(PathFormula):
    left: StateFormula
    right: StateFormula


TRUE = CtlTrue()
FALSE = CtlFalse()


# Constructors for the usual sugar

def AX(phi: StateFormula) -> StateFormula:
    return ForAll(Next(phi))


def EX(phi: StateFormula) -> StateFormula:
    return Exists(Next(phi))


def AU(left: StateFormula, right: StateFormula) -> StateFormula:
    return ForAll(Until(left, right))


def EU(left: StateFormula, right: StateFormula) -> StateFormula:
    return Exists(Until(left, right))


def AV(left: StateFormula, right: StateFormula) -> StateFormula:
    return ForAll(Release(left, right))


def EV(left: StateFormula, right: StateFormula) -> StateFormula:
    return Exists(Release(left, right))


def AF(phi: StateFormula) -> StateFormula:
    return AU(TRUE, phi)


def EF(phi: StateFormula) -> StateFormula:
    return EU(TRUE, phi)


def AG(phi: StateFormula) -> StateFormula:
    return AV(FALSE, phi)


def EG(phi: StateFormula) -> StateFormula:
    return EV(FALSE, phi)


class Shape(str, Enum):
    """Top-level connective of a state formula"""
    TRUE = "true"
    FALSE = "false"
    LIT = "lit"
    AND = "and"
    OR = "or"
    AX = "AX"
    EX = "EX"
    AU = "AU"
    EU = "EU"
    AV = "AV"
    EV = "EV"

    @property
    def is_fixpoint(self) -> bool:
        return self in (Shape.AU, Shape.EU, Shape.AV, Shape.EV)


def shape_of(phi: StateFormula) -> Shape:
    if isinstance(phi, Lit):
        return Shape.LIT
    if isinstance(phi, And):
        return Shape.AND
    if isinstance(phi, Or):
        return Shape.OR
    if isinstance(phi, (ForAll, Exists)):
        universal = isinstance(phi, ForAll)
        path = phi.path
        if isinstance(path, Next):
            return Shape.AX if universal else Shape.EX
        if isinstance(path, Until):
            return Shape.AU if universal else Shape.EU
        if isinstance(path, Release):
            return Shape.AV if universal else Shape.EV
        raise InvalidArgumentError(f"Unknown path formula: {path!r}")
    if isinstance(phi, CtlTrue):
        return Shape.TRUE
    if isinstance(phi, CtlFalse):
        return Shape.FALSE
    raise InvalidArgumentError(f"Not a state formula: {phi!r}")


def _quantify(universal: bool, path: PathFormula) -> StateFormula:
    return ForAll(path) if universal else Exists(path)


def expand(phi: StateFormula) -> StateFormula:
    """
    One-step unfolding of an Until/Release formula.

    Q[p U q] becomes q | (p & QX Q[p U q]);
    Q[p V q] becomes q & (p | QX Q[p V q]).

    Raises:
        InvalidArgumentError: If phi is not an Until or Release formula
    """
    if isinstance(phi, (ForAll, Exists)):
        universal = isinstance(phi, ForAll)
        path = phi.path
        step = _quantify(universal, Next(phi))
        if isinstance(path, Until):
            return Or(path.right, And(path.left, step))
        if isinstance(path, Release):
            return And(path.right, Or(path.left, step))
    raise InvalidArgumentError(f"expand needs an Until or Release formula, got {format_formula(phi)}")


def negate(phi: StateFormula) -> StateFormula:
    """NNF of the negation of phi"""
    if isinstance(phi, CtlTrue):
        return FALSE
    if isinstance(phi, CtlFalse):
        return TRUE
    if isinstance(phi, Lit):
        return Lit(phi.prop, not phi.positive)
    if isinstance(phi, And):
        return Or(negate(phi.left), negate(phi.right))
    if isinstance(phi, Or):
        return And(negate(phi.left), negate(phi.right))
    if isinstance(phi, (ForAll, Exists)):
        dual_universal = not isinstance(phi, ForAll)
        path = phi.path
        if isinstance(path, Next):
            return _quantify(dual_universal, Next(negate(path.operand)))
        if isinstance(path, Until):
            return _quantify(dual_universal, Release(negate(path.left), negate(path.right)))
        if isinstance(path, Release):
            return _quantify(dual_universal, Until(negate(path.left), negate(path.right)))
    raise InvalidArgumentError(f"Cannot negate {phi!r}")


def is_nnf(phi: object) -> bool:
    """True when phi is a well-typed state formula built only from NNF nodes"""
    if isinstance(phi, (CtlTrue, CtlFalse)):
        return True
    if isinstance(phi, Lit):
        return isinstance(phi.prop, str) and bool(phi.prop)
    if isinstance(phi, (And, Or)):
        return is_nnf(phi.left) and is_nnf(phi.right)
    if isinstance(phi, (ForAll, Exists)):
        path = phi.path
        if isinstance(path, Next):
            return is_nnf(path.operand)
        if isinstance(path, (Until, Release)):
            return is_nnf(path.left) and is_nnf(path.right)
    return False


def operands(phi: StateFormula) -> Tuple[StateFormula, ...]:
    """Immediate state subformulas"""
    if isinstance(phi, (And, Or)):
        return (phi.left, phi.right)
    if isinstance(phi, (ForAll, Exists)):
        path = phi.path
        if isinstance(path, Next):
            return (path.operand,)
        return (path.left, path.right)
    return ()


def depth(phi: StateFormula) -> int:
    """Nesting depth of connectives; constants and literals have depth 0"""
    children = operands(phi)
    if not children:
        return 0
    return 1 + max(depth(child) for child in children)


def propositions(phi: StateFormula) -> FrozenSet[str]:
    if isinstance(phi, Lit):
        return frozenset((phi.prop,))
    result: FrozenSet[str] = frozenset()
    for child in operands(phi):
        result |= propositions(child)
    return result


class Closure:
    """
    sub(phi) with dense formula ids.

    Members are numbered in discovery order, the root first. Every
    Until/Release member is followed by its expansion, whose own members
    (the inner connective and the QX step back to the fixpoint formula)
    are part of the closure as well.
    """

    def __init__(self, root: StateFormula):
        if not is_nnf(root):
            raise InvalidArgumentError(f"Formula is not in negation normal form: {root!r}")
        self.root = root
        self.formulas: List[StateFormula] = []
        self.index: Dict[StateFormula, int] = {}
        self.shapes: List[Shape] = []
        # Game-board successors: operands for boolean and next formulas,
        # the expansion for Until/Release
        self.successors: List[Tuple[int, ...]] = []
        self._collect(root)

    def _add(self, phi: StateFormula) -> int:
        fid = len(self.formulas)
        self.index[phi] = fid
        self.formulas.append(phi)
        self.shapes.append(shape_of(phi))
        self.successors.append(())
        return fid

    def _collect(self, root: StateFormula) -> None:
        pending = [root]
        links: List[Tuple[int, Tuple[StateFormula, ...]]] = []
        while pending:
            phi = pending.pop()
            if phi in self.index:
                continue
            fid = self._add(phi)
            shape = self.shapes[fid]
            children = (expand(phi),) if shape.is_fixpoint else operands(phi)
            links.append((fid, children))
            pending.extend(reversed(children))
        for fid, children in links:
            self.successors[fid] = tuple(self.index[child] for child in children)

    def __len__(self) -> int:
        return len(self.formulas)

    def __iter__(self) -> Iterator[StateFormula]:
        return iter(self.formulas)

    def __contains__(self, phi: object) -> bool:
        return phi in self.index

    def id_of(self, phi: StateFormula) -> int:
        try:
            return self.index[phi]
        except KeyError:
            raise InvalidArgumentError(f"{format_formula(phi)} is not in the closure") from None

    def formula(self, fid: int) -> StateFormula:
        return self.formulas[fid]

    def label(self, fid: int) -> str:
        return format_formula(self.formulas[fid])


# Parsing

KEYWORDS = frozenset({"true", "false", "A", "E", "U", "V", "AX", "EX", "AF", "EF", "AG", "EG"})

_PREFIX = {"AX": AX, "EX": EX, "AF": AF, "EF": EF, "AG": AG, "EG": EG}

_CLOSERS = {"[": "]", "(": ")"}


def parse_formula(text: str) -> StateFormula:
    """
    Parse CTL text into an NNF formula.

    Grammar:
        phi ::= true | false | ident | !phi | phi & phi | phi | phi
              | (A|E) [ phi (U|V) phi ] | (AX|EX|AF|EF|AG|EG) phi | ( phi )
    Round brackets may replace the square ones after A/E.

    Raises:
        FormulaSyntaxError: With the 0-based column of the offending token
    """
    if not text or not text.strip():
        raise FormulaSyntaxError("empty formula", text or "", 0)
    stream = TokenStream(text, tokenize(text, FormulaSyntaxError), FormulaSyntaxError)

    def parse_or() -> StateFormula:
        phi = parse_and()
        while stream.at("|"):
            stream.advance()
            phi = Or(phi, parse_and())
        return phi

    def parse_and() -> StateFormula:
        phi = parse_unary()
        while stream.at("&"):
            stream.advance()
            phi = And(phi, parse_unary())
        return phi

    def parse_unary() -> StateFormula:
        token = stream.current
        if stream.at("!"):
            stream.advance()
            return negate(parse_unary())
        if stream.at("("):
            stream.advance()
            phi = parse_or()
            stream.expect(")")
            return phi
        if token.kind != "atom":
            found = token.text or "end of input"
            raise stream.fail(f"unexpected {found!r}")
        word = token.text
        if word in _PREFIX:
            stream.advance()
            return _PREFIX[word](parse_unary())
        if word in ("A", "E"):
            stream.advance()
            return parse_quantified(word == "A")
        if word == "true":
            stream.advance()
            return TRUE
        if word == "false":
            stream.advance()
            return FALSE
        if word in KEYWORDS:
            raise stream.fail(f"unexpected keyword {word!r}")
        stream.advance()
        return Lit(word)

    def parse_quantified(universal: bool) -> StateFormula:
        opener = stream.current.text
        if opener not in _CLOSERS:
            raise stream.fail("expected '[' or '(' after path quantifier")
        stream.advance()
        left = parse_or()
        operator = stream.current.text
        if operator not in ("U", "V"):
            raise stream.fail("expected 'U' or 'V'")
        stream.advance()
        right = parse_or()
        stream.expect(_CLOSERS[opener])
        path = Until(left, right) if operator == "U" else Release(left, right)
        return _quantify(universal, path)

    phi = parse_or()
    stream.expect_end()
    return phi


# Printing

def format_formula(phi: StateFormula) -> str:
    """Print phi in the syntax accepted by parse_formula"""
    return _fmt(phi, "")


def _fmt(phi: StateFormula, parent: str) -> str:
    if isinstance(phi, CtlTrue):
        return "true"
    if isinstance(phi, CtlFalse):
        return "false"
    if isinstance(phi, Lit):
        return phi.prop if phi.positive else "!" + phi.prop
    if isinstance(phi, And):
        right = _fmt(phi.right, "&")
        if isinstance(phi.right, And):
            right = f"({right})"
        body = f"{_fmt(phi.left, '&')} & {right}"
        return f"({body})" if parent == "prefix" else body
    if isinstance(phi, Or):
        right = _fmt(phi.right, "|")
        if isinstance(phi.right, Or):
            right = f"({right})"
        body = f"{_fmt(phi.left, '|')} | {right}"
        return f"({body})" if parent in ("prefix", "&") else body
    if isinstance(phi, (ForAll, Exists)):
        quantifier = "A" if isinstance(phi, ForAll) else "E"
        path = phi.path
        if isinstance(path, Next):
            return f"{quantifier}X {_fmt(path.operand, 'prefix')}"
        operator = "U" if isinstance(path, Until) else "V"
        return f"{quantifier}[{_fmt(path.left, '')} {operator} {_fmt(path.right, '')}]"
    raise InvalidArgumentError(f"Not a state formula: {phi!r}")
