"""
Feature expressions over an explicit configuration space

A configuration is a bit-vector stored as an int: bit i is set when the
feature with id i is enabled. A ConfigSpace is the finite set of valid
configurations together with the feature list they range over.
"""

from dataclasses import dataclass
from typing import FrozenSet, Iterable, Iterator, List, Optional, Sequence, Tuple, Union

from .lexer import TokenStream, tokenize
from ..utils.errors import FeatureExprError, InvalidArgumentError

Config = int


@dataclass(frozen=True)
class Feature:
    """A Boolean product-line option"""
    id: int
    name: str


class FeatExpr:
    """Base class of the feature-expression AST"""

    __slots__ = ()

    def __and__(self, other: "FeatExpr") -> "FeatExpr":
        return And(self, other)

    def __or__(self, other: "FeatExpr") -> "FeatExpr":
        return Or(self, other)

    def __invert__(self) -> "FeatExpr":
        return Not(self)


@dataclass(frozen=True)
class TrueExpr(FeatExpr):
    pass


@dataclass(frozen=True)
class FalseExpr(FeatExpr):
    pass


@dataclass(frozen=True)
class Var(FeatExpr):
    feature: int


@dataclass(frozen=True)
class Not(FeatExpr):
    operand: FeatExpr


@dataclass(frozen=True)
class And(FeatExpr):
    left: FeatExpr
    right: FeatExpr


@dataclass(frozen=True)
class Or(FeatExpr):
    left: FeatExpr
    right: FeatExpr


TRUE = TrueExpr()
FALSE = FalseExpr()


def eval_feat_expr(expr: FeatExpr, k: Config) -> bool:
    """Standard propositional evaluation of expr under configuration k"""
    if isinstance(expr, Var):
        return bool((k >> expr.feature) & 1)
    if isinstance(expr, TrueExpr):
        return True
    if isinstance(expr, FalseExpr):
        return False
    if isinstance(expr, Not):
        return not eval_feat_expr(expr.operand, k)
    if isinstance(expr, And):
        return eval_feat_expr(expr.left, k) and eval_feat_expr(expr.right, k)
    if isinstance(expr, Or):
        return eval_feat_expr(expr.left, k) or eval_feat_expr(expr.right, k)
    raise FeatureExprError(f"Unknown feature expression node: {expr!r}")


def feature_ids(expr: FeatExpr) -> FrozenSet[int]:
    """Feature ids referenced by expr"""
    if isinstance(expr, Var):
        return frozenset((expr.feature,))
    if isinstance(expr, Not):
        return feature_ids(expr.operand)
    if isinstance(expr, (And, Or)):
        return feature_ids(expr.left) | feature_ids(expr.right)
    return frozenset()


def conjoin(exprs: Iterable[FeatExpr]) -> FeatExpr:
    """Left-nested conjunction; TRUE for no operands"""
    result: Optional[FeatExpr] = None
    for expr in exprs:
        result = expr if result is None else And(result, expr)
    return TRUE if result is None else result


def disjoin(exprs: Iterable[FeatExpr]) -> FeatExpr:
    """Left-nested disjunction; FALSE for no operands"""
    result: Optional[FeatExpr] = None
    for expr in exprs:
        result = expr if result is None else Or(result, expr)
    return FALSE if result is None else result


@dataclass(frozen=True)
class ConfigSpace:
    """
    An explicit set K of valid configurations over a feature list.

    Two spaces are equal when they have the same features and the same
    configurations.
    """
    features: Tuple[Feature, ...]
    configs: FrozenSet[Config]

    def __post_init__(self):
        names = [f.name for f in self.features]
        if len(set(names)) != len(names):
            raise FeatureExprError(f"Duplicate feature names: {names}")
        for index, feature in enumerate(self.features):
            if feature.id != index:
                raise FeatureExprError(
                    f"Feature ids must be dense 0..n-1, got {feature.id} at position {index}"
                )
        limit = 1 << len(self.features)
        for k in self.configs:
            if not 0 <= k < limit:
                raise FeatureExprError(f"Configuration {k} does not range over {names}")

    @classmethod
    def full(cls, features: Sequence[Union[Feature, str]]) -> "ConfigSpace":
        """The space 2^F of all feature combinations"""
        feats = _as_features(features)
        return cls(feats, frozenset(range(1 << len(feats))))

    @classmethod
    def from_feature_sets(
        cls,
        features: Sequence[Union[Feature, str]],
        configs: Iterable[Iterable[str]]
    ) -> "ConfigSpace":
        """Build a space from configurations given as sets of enabled feature names"""
        feats = _as_features(features)
        index = {f.name: f.id for f in feats}
        masks = set()
        for enabled in configs:
            mask = 0
            for name in enabled:
                if name not in index:
                    raise FeatureExprError(f"Unknown feature: {name}")
                mask |= 1 << index[name]
            masks.add(mask)
        return cls(feats, frozenset(masks))

    # Set protocol

    def __len__(self) -> int:
        return len(self.configs)

    def __iter__(self) -> Iterator[Config]:
        return iter(sorted(self.configs))

    def __contains__(self, k: object) -> bool:
        return k in self.configs

    def is_empty(self) -> bool:
        return not self.configs

    def subspace(self, configs: Iterable[Config]) -> "ConfigSpace":
        return ConfigSpace(self.features, frozenset(configs))

    def _check_compatible(self, other: "ConfigSpace") -> None:
        if self.features != other.features:
            raise InvalidArgumentError("Configuration spaces range over different features")

    def issubset(self, other: "ConfigSpace") -> bool:
        self._check_compatible(other)
        return self.configs <= other.configs

    def union(self, other: "ConfigSpace") -> "ConfigSpace":
        self._check_compatible(other)
        return self.subspace(self.configs | other.configs)

    def isdisjoint(self, other: "ConfigSpace") -> bool:
        self._check_compatible(other)
        return self.configs.isdisjoint(other.configs)

    # Naming

    def feature_index(self, name: str) -> int:
        for feature in self.features:
            if feature.name == name:
                return feature.id
        raise FeatureExprError(f"Unknown feature: {name}")

    def enabled(self, k: Config) -> List[str]:
        """Names of the features enabled in k, in declaration order"""
        return [f.name for f in self.features if (k >> f.id) & 1]

    def describe(self, k: Config) -> str:
        """Render k as {c,f}; the empty configuration renders as ∅"""
        names = self.enabled(k)
        return "{" + ",".join(names) + "}" if names else "∅"

    def describe_all(self) -> str:
        return "{" + ", ".join(self.describe(k) for k in self) + "}"


def _as_features(features: Sequence[Union[Feature, str]]) -> Tuple[Feature, ...]:
    return tuple(
        f if isinstance(f, Feature) else Feature(i, f)
        for i, f in enumerate(features)
    )


def models(expr: FeatExpr, space: ConfigSpace) -> ConfigSpace:
    """[[expr]] within space: the configurations that satisfy expr"""
    return space.subspace(k for k in space.configs if eval_feat_expr(expr, k))


def alpha_join(expr: FeatExpr, space: ConfigSpace) -> bool:
    """Join abstraction: true iff some configuration of space satisfies expr"""
    return any(eval_feat_expr(expr, k) for k in space.configs)


def alpha_join_dual(expr: FeatExpr, space: ConfigSpace) -> bool:
    """Dual join abstraction: true iff every configuration of space satisfies expr"""
    return all(eval_feat_expr(expr, k) for k in space.configs)


def split(space: ConfigSpace, expr: FeatExpr) -> Tuple[ConfigSpace, ConfigSpace]:
    """Partition space into ([[expr]], [[!expr]])"""
    yes, no = [], []
    for k in space.configs:
        (yes if eval_feat_expr(expr, k) else no).append(k)
    return space.subspace(yes), space.subspace(no)


def cube_of(subset: ConfigSpace, space: ConfigSpace) -> Optional[FeatExpr]:
    """
    Conjunction of literals whose models within space are exactly subset.

    Only features that are constant across subset appear as literals.

    Returns:
        The cube expression, or None when subset is not a cube of space
    """
    if subset.is_empty():
        return None
    literals: List[FeatExpr] = []
    for feature in subset.features:
        values = {(k >> feature.id) & 1 for k in subset.configs}
        if len(values) == 1:
            var = Var(feature.id)
            literals.append(var if values.pop() else Not(var))
    cube = conjoin(literals)
    if models(cube, space).configs != subset.configs:
        return None
    return cube


# Parsing and printing

def _syntax_error(message: str, text: str, position: int) -> FeatureExprError:
    return FeatureExprError(f"{message} at column {position + 1} in guard {text!r}")


def parse_feat_expr(text: str, features: Union[ConfigSpace, Sequence[Feature]]) -> FeatExpr:
    """
    Parse an infix guard such as "!f" or "c & (f | !g)".

    Grammar: true | false | ident | !e | e & e | e | e | (e), with & binding
    tighter than |.

    Raises:
        FeatureExprError: On a syntax error or an undeclared feature
    """
    feats = features.features if isinstance(features, ConfigSpace) else tuple(features)
    index = {f.name: f.id for f in feats}
    stream = TokenStream(text, tokenize(text, _syntax_error), _syntax_error)

    def parse_or() -> FeatExpr:
        expr = parse_and()
        while stream.at("|"):
            stream.advance()
            expr = Or(expr, parse_and())
        return expr

    def parse_and() -> FeatExpr:
        expr = parse_unary()
        while stream.at("&"):
            stream.advance()
            expr = And(expr, parse_unary())
        return expr

    def parse_unary() -> FeatExpr:
        token = stream.current
        if stream.at("!"):
            stream.advance()
            return Not(parse_unary())
        if stream.at("("):
            stream.advance()
            expr = parse_or()
            stream.expect(")")
            return expr
        if token.kind == "atom":
            stream.advance()
            if token.text == "true":
                return TRUE
            if token.text == "false":
                return FALSE
            if token.text not in index:
                raise FeatureExprError(f"Unknown feature {token.text!r} in guard {text!r}")
            return Var(index[token.text])
        found = token.text or "end of input"
        raise stream.fail(f"unexpected {found!r}")

    expr = parse_or()
    stream.expect_end()
    return expr


def format_feat_expr(expr: FeatExpr, features: Union[ConfigSpace, Sequence[Feature]]) -> str:
    """Print expr in the syntax accepted by parse_feat_expr"""
    feats = features.features if isinstance(features, ConfigSpace) else tuple(features)

    def fmt(e: FeatExpr, parent: str) -> str:
        if isinstance(e, TrueExpr):
            return "true"
        if isinstance(e, FalseExpr):
            return "false"
        if isinstance(e, Var):
            return feats[e.feature].name
        if isinstance(e, Not):
            return "!" + fmt(e.operand, "!")
        if isinstance(e, And):
            right = fmt(e.right, "&")
            if isinstance(e.right, And):
                right = f"({right})"
            body = f"{fmt(e.left, '&')} & {right}"
            return f"({body})" if parent == "!" else body
        if isinstance(e, Or):
            right = fmt(e.right, "|")
            if isinstance(e.right, Or):
                right = f"({right})"
            body = f"{fmt(e.left, '|')} | {right}"
            return f"({body})" if parent in ("!", "&") else body
        raise FeatureExprError(f"Unknown feature expression node: {e!r}")

    return fmt(expr, "")
