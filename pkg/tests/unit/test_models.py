"""
Unit tests for transition systems, projections and the join abstraction
"""

import random

import pytest

from lifted_ctl.bench.generators import gen_random_fts
from lifted_ctl.logic.featexpr import TRUE, ConfigSpace, Not, Or, Var
from lifted_ctl.models.transition_systems import (
    FtsBuilder,
    Mts,
    Transition,
    abstract_join,
    project_to_config,
    project_to_subspace,
    validate_fts,
)
from lifted_ctl.utils.errors import FeatureExprError, InvalidArgumentError, ModelValidationError

pytestmark = pytest.mark.unit


def actions_of(ts):
    return sorted(ts.action_names[t.action] for t in ts.transitions)


class TestVendingMachine:
    def test_shape(self, vending):
        core = vending.core
        assert core.state_names == ("s0", "s1", "s2")
        assert len(core.transitions) == 5
        assert core.initial == frozenset({0})
        assert core.holds(2, "r")
        assert not core.holds(0, "r")

    def test_guards_by_name(self, vending):
        assert vending.transition_guard("s0", "pay", "s1") == Not(Var(1))
        assert vending.transition_guard("s1", "cancel", "s0") == Var(0)
        assert vending.transition_guard("s1", "drink", "s2") == TRUE

    def test_unknown_transition(self, vending):
        with pytest.raises(InvalidArgumentError):
            vending.transition_guard("s0", "drink", "s2")

    def test_projection_of_empty_config(self, vending):
        variant = project_to_config(vending, 0)
        assert actions_of(variant) == ["drink", "pay", "take"]
        assert variant.is_total()

    def test_projection_of_full_config(self, vending):
        variant = project_to_config(vending, 3)
        assert actions_of(variant) == ["cancel", "drink", "free", "take"]

    def test_projection_outside_space(self, vending):
        restricted = project_to_subspace(vending, vending.space.subspace([0]))
        with pytest.raises(InvalidArgumentError):
            project_to_config(restricted, 3)

    def test_join_abstraction(self, vending):
        mts = abstract_join(vending)
        names = vending.core.action_names
        may = sorted(names[t.action] for t in mts.may)
        must = sorted(names[t.action] for t in mts.must)
        assert may == ["cancel", "drink", "free", "pay", "take"]
        assert must == ["drink", "take"]

    def test_join_of_single_config_is_concrete(self, vending):
        sub = project_to_subspace(vending, vending.space.subspace([1]))
        mts = abstract_join(sub)
        assert set(mts.may) == set(mts.must)
        assert set(mts.may) == set(project_to_config(vending, 1).transitions)

    def test_subspace_projection_drops_dead_transitions(self, vending):
        sub = project_to_subspace(vending, vending.space.subspace([0, 2]))
        assert "cancel" not in actions_of(sub.core)
        assert project_to_subspace(vending, vending.space) is vending

    def test_subspace_must_be_contained(self, vending):
        other = ConfigSpace.full(["c", "f", "g"])
        with pytest.raises(InvalidArgumentError):
            project_to_subspace(vending, other)


class TestBuilder:
    def test_duplicate_transitions_merge_guards(self):
        builder = FtsBuilder(ConfigSpace.full(["a", "b"]))
        builder.add_state("s", initial=True)
        builder.add_transition("s", "t", "s", Var(0))
        builder.add_transition("s", "t", "s", Var(1))
        fts = builder.build()
        assert len(fts.core.transitions) == 1
        assert fts.guards[0] == Or(Var(0), Var(1))

    def test_no_initial_state(self):
        builder = FtsBuilder(ConfigSpace.full([]))
        builder.add_state("s")
        builder.add_transition("s", "t", "s")
        with pytest.raises(ModelValidationError):
            builder.build()

    def test_unknown_state(self):
        builder = FtsBuilder(ConfigSpace.full([]))
        builder.add_state("s", initial=True)
        with pytest.raises(ModelValidationError):
            builder.add_transition("s", "t", "u")

    def test_duplicate_state(self):
        builder = FtsBuilder(ConfigSpace.full([]))
        builder.add_state("s")
        with pytest.raises(ModelValidationError):
            builder.add_state("s")

    def test_guard_with_undeclared_feature(self):
        builder = FtsBuilder(ConfigSpace.full(["a"]))
        builder.add_state("s", initial=True)
        builder.add_transition("s", "t", "s", Var(3))
        with pytest.raises(FeatureExprError):
            builder.build()


class TestValidation:
    def test_non_total_core_is_rejected(self):
        builder = FtsBuilder(ConfigSpace.full([]))
        builder.add_state("s", initial=True)
        builder.add_state("u")
        builder.add_transition("s", "t", "u")
        with pytest.raises(ModelValidationError, match="not total"):
            validate_fts(builder.build())

    def test_non_total_projection_only_warns(self, mocker):
        builder = FtsBuilder(ConfigSpace.full(["a"]))
        builder.add_state("s", initial=True)
        builder.add_transition("s", "t", "s", Var(0))
        fts = builder.build()
        warning = mocker.patch("lifted_ctl.models.transition_systems.logger.warning")
        validate_fts(fts)
        warning.assert_called_once()

    def test_must_subset_of_may(self, vending):
        with pytest.raises(ModelValidationError):
            Mts(core=vending.core.with_transitions([]), must=frozenset({Transition(0, 0, 1)}))


def random_chain(rng, space):
    """Non-empty nested subspaces k1 <= k2 of space."""
    k2 = space.subspace(k for k in space.configs if rng.random() < 0.7) or space
    k1 = k2.subspace(k for k in k2.configs if rng.random() < 0.5)
    if k1.is_empty():
        k1 = k2.subspace([min(k2.configs)])
    return k1, k2


class TestJoinInvariants:
    @pytest.mark.parametrize("seed", range(25))
    def test_may_grows_and_must_shrinks_along_a_chain(self, seed):
        fts = gen_random_fts(seed, 5, 3)
        rng = random.Random(seed)
        k1, k2 = random_chain(rng, fts.space)
        small = abstract_join(project_to_subspace(fts, k1))
        large = abstract_join(project_to_subspace(fts, k2))
        assert set(small.may) <= set(large.may)
        assert large.must <= small.must

    @pytest.mark.parametrize("seed", range(25))
    def test_single_transition_follows_variants(self, seed):
        fts = gen_random_fts(seed, 5, 3)
        mts = abstract_join(fts)
        variants = [set(project_to_config(fts, k).transitions) for k in fts.space]
        for t in mts.must:
            assert all(t in variant for variant in variants)
        for t in mts.may:
            assert any(t in variant for variant in variants)

    @pytest.mark.parametrize("seed", range(25))
    def test_projection_of_union_is_union_of_projections(self, seed):
        fts = gen_random_fts(seed, 5, 3)
        rng = random.Random(seed)
        left = fts.space.subspace(k for k in fts.space.configs if rng.random() < 0.5)
        right = fts.space.subspace(k for k in fts.space.configs if rng.random() < 0.5)
        joined = project_to_subspace(fts, left.union(right))
        parts = (
            set(project_to_subspace(fts, left).core.transitions)
            | set(project_to_subspace(fts, right).core.transitions)
        )
        assert set(joined.core.transitions) == parts
