"""
Model and formula generators

Bundled product-line models (vending machine, the M_n tree family) and
seeded random models/formulas for oracle comparisons.
"""

import logging
import random
from typing import List, Sequence

from ..logic import ctl
from ..logic.ctl import StateFormula
from ..logic.featexpr import (
    TRUE,
    ConfigSpace,
    FeatExpr,
    Not,
    Var,
    conjoin,
    disjoin,
    eval_feat_expr,
)
from ..models.transition_systems import Fts, FtsBuilder
from ..utils.config import MAX_RANDOM_FEATURES, MAX_RANDOM_STATES
from ..utils.errors import InvalidArgumentError

logger = logging.getLogger('lifted_ctl.bench')

# Properties of the M_n family
MN_ALWAYS = "AF x_ge_0"
MN_NONZERO = "AF x_ge_1"

# Properties of the vending machine
VENDING_ALL_PATHS = "A[!r U r]"
VENDING_SOME_PATH = "E[!r U r]"


def gen_vending_machine() -> Fts:
    """
    Vending machine with features c (cancel) and f (free drinks).

    s0 -pay[!f]-> s1, s0 -free[f]-> s2, s1 -drink-> s2, s1 -cancel[c]-> s0,
    s2 -take-> s0; r holds in s2.
    """
    space = ConfigSpace.full(["c", "f"])
    c, f = Var(0), Var(1)
    builder = FtsBuilder(space)
    builder.add_state("s0", initial=True)
    builder.add_state("s1")
    builder.add_state("s2", labels=["r"])
    builder.add_transition("s0", "pay", "s1", Not(f))
    builder.add_transition("s0", "free", "s2", f)
    builder.add_transition("s1", "drink", "s2")
    builder.add_transition("s1", "cancel", "s0", c)
    builder.add_transition("s2", "take", "s0")
    return builder.build()


def mn_state_values(n: int) -> List[int]:
    """Value of x in each state of M_n, in state order"""
    if n < 1:
        raise InvalidArgumentError(f"M_n needs n >= 1, got {n}")
    values = [0]
    frontier = [0]
    for level in range(1, n + 1):
        step = 1 << (level - 1)
        next_frontier = []
        for parent in frontier:
            for enabled in (True, False):
                values.append(values[parent] + (step if enabled else 0))
                next_frontier.append(len(values) - 1)
        frontier = next_frontier
    return values


def gen_mn(n: int) -> Fts:
    """
    The M_n family: a binary tree of depth n over features A1..An.

    At level k a state branches to a child reached under Ak, where x grows
    by 2^(k-1), and a child reached under !Ak, where x is unchanged. States
    are numbered breadth-first with the Ak child first; leaves loop on
    themselves.
    """
    values = mn_state_values(n)
    space = ConfigSpace.full([f"A{k}" for k in range(1, n + 1)])
    builder = FtsBuilder(space)
    for index, x in enumerate(values):
        labels = ["x_ge_0"] + (["x_ge_1"] if x >= 1 else [])
        builder.add_state(f"q{index}", initial=index == 0, labels=labels)

    child = 1
    level_start, level_size = 0, 1
    for level in range(1, n + 1):
        feature = Var(level - 1)
        for parent in range(level_start, level_start + level_size):
            builder.add_transition(f"q{parent}", "tau", f"q{child}", feature)
            builder.add_transition(f"q{parent}", "tau", f"q{child + 1}", Not(feature))
            child += 2
        level_start += level_size
        level_size *= 2

    for leaf in range(level_start, level_start + level_size):
        builder.add_transition(f"q{leaf}", "tau", f"q{leaf}")
    return builder.build()


def _random_cube(rng: random.Random, feature_count: int) -> FeatExpr:
    literals: List[FeatExpr] = []
    for feature in range(feature_count):
        roll = rng.random()
        if roll < 0.2:
            literals.append(Var(feature))
        elif roll < 0.4:
            literals.append(Not(Var(feature)))
    return conjoin(literals)


def _random_guard(rng: random.Random, feature_count: int) -> FeatExpr:
    """A cube, or with probability 0.3 a disjunction of two or three cubes"""
    if feature_count and rng.random() < 0.3:
        return disjoin(_random_cube(rng, feature_count) for _ in range(rng.randint(2, 3)))
    return _random_cube(rng, feature_count)


def gen_random_fts(seed: int, state_count: int, feature_count: int, prop_count: int = 2) -> Fts:
    """
    Seeded random FTS whose projections are all total.

    Guards are random cubes or disjunctions of cubes; a true-guarded
    self-loop is added to every state that some valid configuration would
    otherwise leave stuck.

    Raises:
        InvalidArgumentError: If the counts exceed the configured caps
    """
    if not 1 <= state_count <= MAX_RANDOM_STATES:
        raise InvalidArgumentError(f"state_count must be in 1..{MAX_RANDOM_STATES}, got {state_count}")
    if not 0 <= feature_count <= MAX_RANDOM_FEATURES:
        raise InvalidArgumentError(f"feature_count must be in 0..{MAX_RANDOM_FEATURES}, got {feature_count}")

    rng = random.Random(seed)
    features = [f"f{i}" for i in range(feature_count)]
    full = ConfigSpace.full(features)
    if feature_count and rng.random() < 0.5:
        configs = [k for k in full.configs if rng.random() < 0.6] or [rng.randrange(len(full))]
        space = full.subspace(configs)
    else:
        space = full

    props = [chr(ord("p") + i) for i in range(prop_count)]
    builder = FtsBuilder(space)
    for prop in props:
        builder.declare_prop(prop)
    for s in range(state_count):
        labels = [p for p in props if rng.random() < 0.5]
        builder.add_state(f"s{s}", initial=(s == 0 or rng.random() < 0.15), labels=labels)

    actions = ["a", "b", "c"]
    guards_from: List[List[FeatExpr]] = [[] for _ in range(state_count)]
    for s in range(state_count):
        for _ in range(rng.randint(1, 3)):
            target = rng.randrange(state_count)
            guard = _random_guard(rng, feature_count)
            builder.add_transition(f"s{s}", rng.choice(actions), f"s{target}", guard)
            guards_from[s].append(guard)

    for s in range(state_count):
        if any(not any(eval_feat_expr(g, k) for g in guards_from[s]) for k in space.configs):
            builder.add_transition(f"s{s}", "tau", f"s{s}", TRUE)

    fts = builder.build()
    logger.debug(
        "Random model generated",
        extra={'seed': seed, 'states': state_count, 'features': feature_count,
               'transitions': len(fts.core.transitions)}
    )
    return fts


def gen_random_formula(rng: random.Random, props: Sequence[str], depth: int) -> StateFormula:
    """Random NNF formula of nesting depth at most depth"""
    if not props:
        raise InvalidArgumentError("Need at least one proposition")

    def leaf() -> StateFormula:
        roll = rng.random()
        if roll < 0.05:
            return ctl.TRUE
        if roll < 0.1:
            return ctl.FALSE
        return ctl.Lit(rng.choice(list(props)), rng.random() < 0.6)

    def gen(budget: int) -> StateFormula:
        if budget == 0 or rng.random() < 0.2:
            return leaf()
        op = rng.choice(("and", "or", "AX", "EX", "AU", "EU", "AV", "EV"))
        if op == "and":
            return ctl.And(gen(budget - 1), gen(budget - 1))
        if op == "or":
            return ctl.Or(gen(budget - 1), gen(budget - 1))
        if op == "AX":
            return ctl.AX(gen(budget - 1))
        if op == "EX":
            return ctl.EX(gen(budget - 1))
        builder = {"AU": ctl.AU, "EU": ctl.EU, "AV": ctl.AV, "EV": ctl.EV}[op]
        return builder(gen(budget - 1), gen(budget - 1))

    return gen(depth)


def random_corpus(seed: int, max_states: int = 6, max_features: int = 4, formulas: int = 3, depth: int = 4):
    """Seeded (model, formulas) pair for oracle comparisons"""
    rng = random.Random(seed)
    fts = gen_random_fts(seed, rng.randint(1, max_states), rng.randint(0, max_features))
    props = list(fts.core.prop_names) or ["p"]
    return fts, [gen_random_formula(rng, props, depth) for _ in range(formulas)]
