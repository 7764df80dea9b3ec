"""
Oracle Service for lifted CTL checking
Reference checker: fixpoint labeling per variant, one variant at a time
"""

import logging
from typing import Dict, FrozenSet, List

from ..logic.ctl import (
    And,
    CtlFalse,
    CtlTrue,
    Exists,
    ForAll,
    Lit,
    Next,
    Or,
    Release,
    StateFormula,
    Until,
)
from ..logic.featexpr import Config
from ..models.transition_systems import Fts, Ts, project_to_config
from ..utils.errors import InvalidArgumentError

logger = logging.getLogger('lifted_ctl.oracle')


class FixpointLabeler:
    """
    Bottom-up labeling of a total transition system.

    Until formulas are least fixpoints, Release formulas greatest
    fixpoints; next operators are one-step images.
    """

    def __init__(self, ts: Ts):
        if not ts.is_total():
            dead = [ts.state_names[s] for s in ts.non_total_states()]
            raise InvalidArgumentError(f"Oracle needs a total transition system; stuck states: {dead}")
        self.ts = ts
        self.states = frozenset(range(ts.state_count))
        self.succ: List[List[int]] = [ts.successors(s) for s in range(ts.state_count)]
        self._cache: Dict[StateFormula, FrozenSet[int]] = {}

    def sat(self, phi: StateFormula) -> FrozenSet[int]:
        """States satisfying phi"""
        cached = self._cache.get(phi)
        if cached is None:
            cached = self._label(phi)
            self._cache[phi] = cached
        return cached

    def _label(self, phi: StateFormula) -> FrozenSet[int]:
        if isinstance(phi, CtlTrue):
            return self.states
        if isinstance(phi, CtlFalse):
            return frozenset()
        if isinstance(phi, Lit):
            return frozenset(s for s in self.states if self.ts.holds(s, phi.prop) == phi.positive)
        if isinstance(phi, And):
            return self.sat(phi.left) & self.sat(phi.right)
        if isinstance(phi, Or):
            return self.sat(phi.left) | self.sat(phi.right)

        universal = isinstance(phi, ForAll)
        if not isinstance(phi, (ForAll, Exists)):
            raise InvalidArgumentError(f"Not a state formula: {phi!r}")
        path = phi.path
        if isinstance(path, Next):
            return self._pre(self.sat(path.operand), universal)
        left, right = self.sat(path.left), self.sat(path.right)
        if isinstance(path, Until):
            return self._least(left, right, universal)
        if isinstance(path, Release):
            return self._greatest(left, right, universal)
        raise InvalidArgumentError(f"Unknown path formula: {path!r}")

    def _pre(self, target: FrozenSet[int], universal: bool) -> FrozenSet[int]:
        if universal:
            return frozenset(s for s in self.states if all(t in target for t in self.succ[s]))
        return frozenset(s for s in self.states if any(t in target for t in self.succ[s]))

    def _least(self, left: FrozenSet[int], right: FrozenSet[int], universal: bool) -> FrozenSet[int]:
        """Z = right | (left & pre(Z)), from below"""
        z: FrozenSet[int] = frozenset()
        while True:
            nxt = right | (left & self._pre(z, universal))
            if nxt == z:
                return z
            z = nxt

    def _greatest(self, left: FrozenSet[int], right: FrozenSet[int], universal: bool) -> FrozenSet[int]:
        """Z = right & (left | pre(Z)), from above"""
        z = self.states
        while True:
            nxt = right & (left | self._pre(z, universal))
            if nxt == z:
                return z
            z = nxt


def satisfying_states(ts: Ts, phi: StateFormula) -> FrozenSet[int]:
    return FixpointLabeler(ts).sat(phi)


def check_ts(ts: Ts, phi: StateFormula) -> bool:
    """True iff every initial state of ts satisfies phi"""
    return ts.initial <= satisfying_states(ts, phi)


def lifted_check_brute(fts: Fts, phi: StateFormula) -> Dict[Config, bool]:
    """
    Verdict per configuration by checking every projection separately

    Raises:
        InvalidArgumentError: If some projection is not total; the message
            names the configuration
    """
    verdicts: Dict[Config, bool] = {}
    for k in fts.space:
        try:
            verdicts[k] = check_ts(project_to_config(fts, k), phi)
        except InvalidArgumentError as e:
            raise InvalidArgumentError(f"configuration {fts.space.describe(k)}: {e}") from e
    logger.info(
        "Brute-force check finished",
        extra={'configs': len(verdicts), 'violated': sum(1 for v in verdicts.values() if not v)}
    )
    return verdicts
