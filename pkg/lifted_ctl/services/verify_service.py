"""
Verify Service for lifted CTL checking
Recursive abstraction refinement over the configuration space
"""

import logging
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, List, Optional, Sequence

from ..game.coloring import ThreeValued, color_graph
from ..game.dot_export import export_dot
from ..game.engine import GameResult, solve_game
from ..game.graph_builder import build_game_graph
from ..game.graph_analyzer import decompose
from ..game.reuse import ReuseStore
from ..logic.ctl import Closure, StateFormula, format_formula, propositions
from ..logic.featexpr import Config, ConfigSpace, cube_of, format_feat_expr, split
from ..models.transition_systems import Fts, Mts, abstract_join, project_to_subspace
from ..utils.config import DEFAULT_REUSE
from ..utils.errors import InvalidArgumentError, InvariantViolation

logger = logging.getLogger('lifted_ctl.verify')


@dataclass
class VerifyOptions:
    """
    reuse: carry definite colors into refined checks
    check_reuse: also solve every refined game without pruning and compare
    dot_dir: write one colored game-graph per engine call
    max_depth: recursion guard, defaults to |K|
    """
    reuse: bool = DEFAULT_REUSE
    check_reuse: bool = False
    dot_dir: Optional[Path] = None
    max_depth: Optional[int] = None


@dataclass
class Verdict:
    """Outcome for one subset of the configuration space"""
    space: ConfigSpace
    satisfied: bool

    @property
    def label(self) -> str:
        return "sat" if self.satisfied else "viol"


@dataclass
class IterationRecord:
    """One engine call of the refinement"""
    call: int
    depth: int
    configs: List[str]
    result: str
    nodes_built: int
    nodes_reused: int
    elapsed_ms: float
    failure_node: Optional[str] = None
    failure_edge: Optional[str] = None
    split_guard: Optional[str] = None


@dataclass
class VerifyStats:
    calls: int = 0
    iterations: int = 0
    splits: int = 0
    nodes_built: int = 0
    nodes_reused: int = 0
    elapsed_ms: float = 0.0


@dataclass
class VerifyReport:
    """
    Verdicts partition the checked configuration space into non-empty,
    pairwise disjoint subsets.
    """
    space: ConfigSpace
    formula: str
    verdicts: List[Verdict]
    stats: VerifyStats = field(default_factory=VerifyStats)
    trace: List[IterationRecord] = field(default_factory=list)

    def _union(self, satisfied: bool) -> ConfigSpace:
        configs = set()
        for verdict in self.verdicts:
            if verdict.satisfied == satisfied:
                configs |= verdict.space.configs
        return self.space.subspace(configs)

    @property
    def satisfied(self) -> ConfigSpace:
        return self._union(True)

    @property
    def violated(self) -> ConfigSpace:
        return self._union(False)

    @property
    def all_satisfied(self) -> bool:
        return all(v.satisfied for v in self.verdicts)

    def per_config(self) -> Dict[Config, bool]:
        result: Dict[Config, bool] = {}
        for verdict in self.verdicts:
            for k in verdict.space.configs:
                result[k] = verdict.satisfied
        return result

    def describe_subset(self, subset: ConfigSpace) -> Optional[str]:
        """Cube formula for subset relative to the checked space, if it is one"""
        cube = cube_of(subset, self.space)
        return None if cube is None else format_feat_expr(cube, self.space)


class VerifyService:
    """
    Lifted checking by abstraction refinement.

    Each call checks the join abstraction of the current projection. A
    definite answer holds for the whole subspace; an indefinite one is
    split on the guard of the failure edge and both halves are checked
    recursively.
    """

    def __init__(self, options: Optional[VerifyOptions] = None):
        self.options = options or VerifyOptions()

    def verify(self, fts: Fts, phi: StateFormula, space: Optional[ConfigSpace] = None) -> VerifyReport:
        """
        Verify phi for every configuration of space

        Args:
            fts: Featured transition system
            phi: NNF formula
            space: Subset of fts.space, defaults to all of it

        Returns:
            VerifyReport with leaf verdicts in depth-first order
        """
        space = fts.space if space is None else space
        if space.is_empty():
            raise InvalidArgumentError("Cannot verify an empty configuration space")
        fts = project_to_subspace(fts, space)
        closure = Closure(phi)

        missing = sorted(p for p in propositions(phi) if fts.core.prop_index(p) is None)
        if missing:
            logger.warning("Propositions not used by the model are false everywhere", extra={'props': missing})

        self._closure = closure
        self._max_depth = self.options.max_depth if self.options.max_depth is not None else len(space)
        self._trace: List[IterationRecord] = []
        self._stats = VerifyStats()

        start = time.perf_counter()
        verdicts = self._verify(fts, ReuseStore(), 0)
        self._stats.elapsed_ms = (time.perf_counter() - start) * 1000

        report = VerifyReport(space, format_formula(phi), verdicts, self._stats, self._trace)
        logger.info(
            "Verification finished",
            extra={
                'formula': report.formula,
                'calls': self._stats.calls,
                'splits': self._stats.splits,
                'satisfied': len(report.satisfied),
                'violated': len(report.violated),
            }
        )
        return report

    def _verify(self, fts: Fts, reuse: ReuseStore, depth: int) -> List[Verdict]:
        if depth > self._max_depth:
            raise InvariantViolation(f"Refinement deeper than {self._max_depth} levels")

        mts = abstract_join(fts)
        game = solve_game(mts, self._closure, reuse if self.options.reuse else None)
        self._stats.calls += 1
        self._stats.iterations = max(self._stats.iterations, depth + 1)
        self._stats.nodes_built += game.nodes_built
        self._stats.nodes_reused += game.nodes_reused

        record = IterationRecord(
            call=self._stats.calls,
            depth=depth,
            configs=[fts.space.describe(k) for k in fts.space],
            result=game.result.value,
            nodes_built=game.nodes_built,
            nodes_reused=game.nodes_reused,
            elapsed_ms=game.elapsed_ms,
        )
        self._trace.append(record)

        if self.options.check_reuse and len(reuse):
            self._check_reuse(mts, reuse)
        if self.options.dot_dir is not None:
            export_dot(
                game.graph, game.coloring,
                Path(self.options.dot_dir) / f"call_{record.call:03d}.dot",
                failure=game.failure,
            )

        logger.info(
            "Engine call",
            extra={
                'call': record.call,
                'depth': depth,
                'configs': len(fts.space),
                'nodes_built': game.nodes_built,
                'nodes_reused': game.nodes_reused,
                'result': game.result.value,
            }
        )

        if game.result is not ThreeValued.INDEFINITE:
            return [Verdict(fts.space, game.result is ThreeValued.TT)]

        return self._refine(fts, game, reuse, depth, record)

    def _refine(
        self,
        fts: Fts,
        game: GameResult,
        reuse: ReuseStore,
        depth: int,
        record: IterationRecord
    ) -> List[Verdict]:
        failure = game.failure
        guard = fts.guard_of(failure.edge.transition)
        yes, no = split(fts.space, guard)
        if yes.is_empty() or no.is_empty():
            raise InvariantViolation(
                f"Failure guard {format_feat_expr(guard, fts.space)} does not split the configuration space"
            )

        self._stats.splits += 1
        record.failure_node = game.graph.describe_node(failure.node)
        record.failure_edge = game.graph.describe_edge(failure.edge)
        record.split_guard = format_feat_expr(guard, fts.space)
        logger.info(
            "Refining",
            extra={'failure': record.failure_edge, 'guard': record.split_guard, 'depth': depth}
        )

        child_reuse = reuse.extended(game.graph, game.coloring) if self.options.reuse else reuse
        verdicts: List[Verdict] = []
        for half in (yes, no):
            verdicts.extend(self._verify(project_to_subspace(fts, half), child_reuse, depth + 1))
        return verdicts

    def _check_reuse(self, mts: Mts, reuse: ReuseStore) -> None:
        """Recolor without pruning and compare with the stored colors"""
        graph = build_game_graph(mts, self._closure)
        coloring = color_graph(graph, decompose(graph))
        for index, stored, fresh in reuse.mismatches(graph, coloring):
            raise InvariantViolation(
                f"Reused color {stored.value} of {graph.describe_node(index)} "
                f"differs from recomputed {fresh.value if fresh else None}"
            )


def verify(
    fts: Fts,
    phi: StateFormula,
    space: Optional[ConfigSpace] = None,
    options: Optional[VerifyOptions] = None
) -> VerifyReport:
    return VerifyService(options).verify(fts, phi, space)


def combine_reports(parts: Sequence[VerifyReport]) -> VerifyReport:
    """
    Combine reports of disjoint subspaces into one.

    Consecutive verdicts with the same outcome are merged.

    Raises:
        InvalidArgumentError: If the parts overlap or check different formulas
    """
    if not parts:
        raise InvalidArgumentError("Nothing to combine")
    if len(parts) == 1:
        return parts[0]

    formulas = {part.formula for part in parts}
    if len(formulas) != 1:
        raise InvalidArgumentError(f"Reports check different formulas: {sorted(formulas)}")

    space = parts[0].space
    for part in parts[1:]:
        if not space.isdisjoint(part.space):
            raise InvalidArgumentError("Reports cover overlapping configuration spaces")
        space = space.union(part.space)

    verdicts: List[Verdict] = []
    for verdict in (v for part in parts for v in part.verdicts):
        if verdicts and verdicts[-1].satisfied == verdict.satisfied:
            verdicts[-1] = Verdict(verdicts[-1].space.union(verdict.space), verdict.satisfied)
        else:
            verdicts.append(verdict)

    stats = VerifyStats(
        calls=sum(p.stats.calls for p in parts),
        iterations=max(p.stats.iterations for p in parts),
        splits=sum(p.stats.splits for p in parts),
        nodes_built=sum(p.stats.nodes_built for p in parts),
        nodes_reused=sum(p.stats.nodes_reused for p in parts),
        elapsed_ms=sum(p.stats.elapsed_ms for p in parts),
    )
    trace = [record for part in parts for record in part.trace]
    return VerifyReport(space, parts[0].formula, verdicts, stats, trace)
