"""
Transition systems, featured transition systems and modal transition systems

States, actions and propositions are interned to dense integer ids.
Transitions keep their insertion order so that everything built on top of
them (game graphs, reports, DOT files) is deterministic.
"""

import logging
from dataclasses import dataclass, field, replace
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from ..logic.featexpr import (
    Config,
    ConfigSpace,
    FeatExpr,
    TRUE,
    Or,
    alpha_join,
    alpha_join_dual,
    eval_feat_expr,
    feature_ids,
)
from ..utils.errors import FeatureExprError, InvalidArgumentError, ModelValidationError

logger = logging.getLogger('lifted_ctl.models')


@dataclass(frozen=True)
class Transition:
    """A (source, action, target) triple of ids"""
    source: int
    action: int
    target: int


@dataclass(frozen=True)
class Ts:
    """
    A transition system.

    labels[s] is the set of proposition ids that hold in state s.
    """
    state_names: Tuple[str, ...]
    action_names: Tuple[str, ...]
    prop_names: Tuple[str, ...]
    transitions: Tuple[Transition, ...]
    initial: FrozenSet[int]
    labels: Tuple[FrozenSet[int], ...]

    def __post_init__(self):
        n_states = len(self.state_names)
        if len(set(self.state_names)) != n_states:
            raise ModelValidationError("Duplicate state names")
        if not self.initial:
            raise ModelValidationError("A transition system needs at least one initial state")
        if any(not 0 <= s < n_states for s in self.initial):
            raise ModelValidationError("Initial state out of range")
        if len(self.labels) != n_states:
            raise ModelValidationError("Labeling must cover every state")
        n_props = len(self.prop_names)
        for props in self.labels:
            if any(not 0 <= p < n_props for p in props):
                raise ModelValidationError("Label refers to an unknown proposition")
        n_actions = len(self.action_names)
        if len(set(self.transitions)) != len(self.transitions):
            raise ModelValidationError("Duplicate transition")
        for t in self.transitions:
            if not (0 <= t.source < n_states and 0 <= t.target < n_states and 0 <= t.action < n_actions):
                raise ModelValidationError(f"Transition {t} refers to an unknown state or action")

    @cached_property
    def _prop_index(self) -> Dict[str, int]:
        return {name: i for i, name in enumerate(self.prop_names)}

    @cached_property
    def _state_index(self) -> Dict[str, int]:
        return {name: i for i, name in enumerate(self.state_names)}

    @cached_property
    def outgoing(self) -> Tuple[Tuple[Transition, ...], ...]:
        """Outgoing transitions per state, in transition order"""
        per_state: List[List[Transition]] = [[] for _ in self.state_names]
        for t in self.transitions:
            per_state[t.source].append(t)
        return tuple(tuple(ts) for ts in per_state)

    @property
    def state_count(self) -> int:
        return len(self.state_names)

    def state_index(self, name: str) -> int:
        try:
            return self._state_index[name]
        except KeyError:
            raise InvalidArgumentError(f"Unknown state: {name}") from None

    def prop_index(self, name: str) -> Optional[int]:
        """Id of a proposition, or None if no state is labeled with it"""
        return self._prop_index.get(name)

    def holds(self, state: int, prop: str) -> bool:
        pid = self._prop_index.get(prop)
        return pid is not None and pid in self.labels[state]

    def successors(self, state: int) -> List[int]:
        return [t.target for t in self.outgoing[state]]

    def non_total_states(self) -> List[int]:
        return [s for s, out in enumerate(self.outgoing) if not out]

    def is_total(self) -> bool:
        return not self.non_total_states()

    def with_transitions(self, transitions: Iterable[Transition]) -> "Ts":
        return replace(self, transitions=tuple(transitions))


@dataclass(frozen=True)
class Fts:
    """
    A featured transition system: guards[i] is the presence condition of
    core.transitions[i].
    """
    core: Ts
    space: ConfigSpace
    guards: Tuple[FeatExpr, ...]

    def __post_init__(self):
        if len(self.guards) != len(self.core.transitions):
            raise ModelValidationError("Every transition needs exactly one guard")
        n_features = len(self.space.features)
        for guard in self.guards:
            unknown = [f for f in feature_ids(guard) if f >= n_features]
            if unknown:
                raise FeatureExprError(f"Guard refers to undeclared feature ids {unknown}")

    @cached_property
    def _guard_index(self) -> Dict[Transition, FeatExpr]:
        return dict(zip(self.core.transitions, self.guards))

    def guard_of(self, t: Transition) -> FeatExpr:
        try:
            return self._guard_index[t]
        except KeyError:
            raise InvalidArgumentError(f"Transition {t} is not part of the model") from None

    def transition_guard(self, source: str, action: str, target: str) -> FeatExpr:
        """Guard of the transition given by state and action names"""
        core = self.core
        if action not in core.action_names:
            raise InvalidArgumentError(f"Unknown action: {action}")
        t = Transition(core.state_index(source), core.action_names.index(action), core.state_index(target))
        return self.guard_of(t)

    def guarded_transitions(self) -> Iterable[Tuple[Transition, FeatExpr]]:
        return zip(self.core.transitions, self.guards)


@dataclass(frozen=True)
class Mts:
    """
    A modal transition system. core.transitions is the may relation;
    must is a subset of it.
    """
    core: Ts
    must: FrozenSet[Transition] = field(default_factory=frozenset)

    def __post_init__(self):
        if not self.must <= set(self.core.transitions):
            raise ModelValidationError("Must transitions must be a subset of may transitions")

    @property
    def may(self) -> Tuple[Transition, ...]:
        return self.core.transitions

    def is_must(self, t: Transition) -> bool:
        return t in self.must


class FtsBuilder:
    """
    Incremental construction of an Fts.

    Transitions with the same (source, action, target) are merged by
    disjoining their guards.
    """

    def __init__(self, space: ConfigSpace):
        self.space = space
        self.state_names: List[str] = []
        self.action_names: List[str] = []
        self.prop_names: List[str] = []
        self.initial: List[int] = []
        self.labels: List[set] = []
        self.transitions: List[Transition] = []
        self.guards: List[FeatExpr] = []
        self.state_index: Dict[str, int] = {}
        self.action_index: Dict[str, int] = {}
        self.prop_index: Dict[str, int] = {}
        self.transition_index: Dict[Transition, int] = {}

    def add_state(self, name: str, initial: bool = False, labels: Sequence[str] = ()) -> int:
        if name in self.state_index:
            raise ModelValidationError(f"Duplicate state: {name}")
        sid = len(self.state_names)
        self.state_names.append(name)
        self.state_index[name] = sid
        self.labels.append(set())
        if initial:
            self.initial.append(sid)
        for prop in labels:
            self.add_label(name, prop)
        return sid

    def declare_prop(self, prop: str) -> int:
        if prop not in self.prop_index:
            self.prop_index[prop] = len(self.prop_names)
            self.prop_names.append(prop)
        return self.prop_index[prop]

    def add_label(self, state: str, prop: str) -> None:
        sid = self._state(state)
        self.labels[sid].add(self.declare_prop(prop))

    def add_transition(self, source: str, action: str, target: str, guard: FeatExpr = TRUE) -> Transition:
        if action not in self.action_index:
            self.action_index[action] = len(self.action_names)
            self.action_names.append(action)
        t = Transition(self._state(source), self.action_index[action], self._state(target))
        if t in self.transition_index:
            i = self.transition_index[t]
            self.guards[i] = Or(self.guards[i], guard)
        else:
            self.transition_index[t] = len(self.transitions)
            self.transitions.append(t)
            self.guards.append(guard)
        return t

    def _state(self, name: str) -> int:
        try:
            return self.state_index[name]
        except KeyError:
            raise ModelValidationError(f"Unknown state: {name}") from None

    def build(self) -> Fts:
        core = Ts(
            state_names=tuple(self.state_names),
            action_names=tuple(self.action_names),
            prop_names=tuple(self.prop_names),
            transitions=tuple(self.transitions),
            initial=frozenset(self.initial),
            labels=tuple(frozenset(props) for props in self.labels),
        )
        return Fts(core=core, space=self.space, guards=tuple(self.guards))


def project_to_config(fts: Fts, k: Config) -> Ts:
    """The variant of fts selected by configuration k"""
    if k not in fts.space:
        raise InvalidArgumentError(f"Configuration {fts.space.describe(k)} is not in the configuration space")
    return fts.core.with_transitions(
        t for t, guard in fts.guarded_transitions() if eval_feat_expr(guard, k)
    )


def project_to_subspace(fts: Fts, sub: ConfigSpace) -> Fts:
    """Restrict fts to sub, keeping transitions admitted by at least one configuration"""
    if not sub.issubset(fts.space):
        raise InvalidArgumentError("Subspace is not contained in the model's configuration space")
    if sub == fts.space:
        return fts
    kept = [(t, guard) for t, guard in fts.guarded_transitions() if alpha_join(guard, sub)]
    core = fts.core.with_transitions(t for t, _ in kept)
    return Fts(core=core, space=sub, guards=tuple(guard for _, guard in kept))


def abstract_join(fts: Fts) -> Mts:
    """
    Join abstraction of fts: a transition is a may transition when some
    configuration admits it and a must transition when all of them do.
    """
    may: List[Transition] = []
    must = set()
    for t, guard in fts.guarded_transitions():
        if alpha_join(guard, fts.space):
            may.append(t)
            if alpha_join_dual(guard, fts.space):
                must.add(t)
    return Mts(core=fts.core.with_transitions(may), must=frozenset(must))


def validate_fts(fts: Fts, check_projections: bool = True) -> None:
    """
    Check that the underlying transition system is total.

    Projections that lose totality are allowed but logged; the game
    handles states without successors.

    Raises:
        ModelValidationError: If some state has no outgoing transition at all
    """
    core = fts.core
    dead = core.non_total_states()
    if dead:
        names = ", ".join(core.state_names[s] for s in dead)
        raise ModelValidationError(f"Transition relation is not total: no outgoing transition from {names}")
    if not check_projections:
        return
    for k in fts.space:
        variant = project_to_config(fts, k)
        stuck = variant.non_total_states()
        if stuck:
            logger.warning(
                "Projection is not total",
                extra={
                    'config': fts.space.describe(k),
                    'states': [core.state_names[s] for s in stuck],
                }
            )
