"""
Unit tests for feature expressions and configuration spaces
"""

import random

import pytest

from lifted_ctl.logic.featexpr import (
    FALSE,
    TRUE,
    And,
    ConfigSpace,
    Not,
    Or,
    Var,
    alpha_join,
    alpha_join_dual,
    cube_of,
    eval_feat_expr,
    format_feat_expr,
    models,
    parse_feat_expr,
    split,
)
from lifted_ctl.utils.errors import FeatureExprError, InvalidArgumentError

pytestmark = pytest.mark.unit


@pytest.fixture
def space():
    """Full space over features c and f."""
    return ConfigSpace.full(["c", "f"])


class TestEvaluation:
    def test_variables_read_config_bits(self):
        assert eval_feat_expr(Var(0), 0b01)
        assert not eval_feat_expr(Var(1), 0b01)
        assert eval_feat_expr(Not(Var(1)), 0b01)

    def test_connectives(self):
        expr = Or(And(Var(0), Var(1)), Not(Var(0)))
        assert [eval_feat_expr(expr, k) for k in range(4)] == [True, False, True, True]

    def test_constants(self):
        assert eval_feat_expr(TRUE, 3)
        assert not eval_feat_expr(FALSE, 0)


class TestAbstraction:
    def test_join_is_existential(self, space):
        assert alpha_join(Var(1), space)
        assert not alpha_join(FALSE, space)

    def test_dual_join_is_universal(self, space):
        assert not alpha_join_dual(Var(1), space)
        assert alpha_join_dual(TRUE, space)
        assert alpha_join_dual(Var(1), space.subspace([2, 3]))

    def test_empty_space(self, space):
        empty = space.subspace([])
        assert not alpha_join(TRUE, empty)
        assert alpha_join_dual(FALSE, empty)

    def test_duality_on_random_pairs(self):
        rng = random.Random(7)

        def random_expr(budget):
            if budget == 0 or rng.random() < 0.3:
                roll = rng.random()
                if roll < 0.1:
                    return TRUE
                if roll < 0.2:
                    return FALSE
                return Var(rng.randrange(3))
            op = rng.choice(("not", "and", "or"))
            if op == "not":
                return Not(random_expr(budget - 1))
            left, right = random_expr(budget - 1), random_expr(budget - 1)
            return And(left, right) if op == "and" else Or(left, right)

        full = ConfigSpace.full(["a", "b", "c"])
        for _ in range(1000):
            psi = random_expr(4)
            k = full.subspace(c for c in full.configs if rng.random() < 0.5)
            assert alpha_join_dual(psi, k) == (not alpha_join(Not(psi), k))


class TestConfigSpace:
    def test_full_space_size(self):
        assert len(ConfigSpace.full(["a", "b", "c"])) == 8
        assert len(ConfigSpace.full([])) == 1

    def test_iteration_is_sorted(self, space):
        assert list(space) == [0, 1, 2, 3]

    def test_describe(self, space):
        assert space.describe(0) == "∅"
        assert space.describe(3) == "{c,f}"
        assert space.describe_all() == "{∅, {c}, {f}, {c,f}}"

    def test_from_feature_sets(self):
        space = ConfigSpace.from_feature_sets(["c", "f"], [[], ["f"], ["c", "f"]])
        assert space.configs == frozenset({0, 2, 3})

    def test_from_feature_sets_rejects_unknown_feature(self):
        with pytest.raises(FeatureExprError):
            ConfigSpace.from_feature_sets(["c"], [["x"]])

    def test_duplicate_feature_names(self):
        with pytest.raises(FeatureExprError):
            ConfigSpace.full(["c", "c"])

    def test_set_operations_need_same_features(self, space):
        other = ConfigSpace.full(["c"])
        with pytest.raises(InvalidArgumentError):
            space.union(other)

    def test_split_partitions(self, space):
        yes, no = split(space, Var(0))
        assert yes.configs == frozenset({1, 3})
        assert no.configs == frozenset({0, 2})
        assert yes.isdisjoint(no)
        assert yes.union(no) == space

    def test_models(self, space):
        assert models(Not(Var(1)), space).configs == frozenset({0, 1})


class TestCubes:
    def test_cube_of_single_config(self, space):
        cube = cube_of(space.subspace([1]), space)
        assert format_feat_expr(cube, space) == "c & !f"

    def test_cube_of_half_space(self, space):
        cube = cube_of(space.subspace([0, 2]), space)
        assert format_feat_expr(cube, space) == "!c"

    def test_cube_of_whole_space_is_true(self, space):
        assert cube_of(space, space) == TRUE

    def test_non_cube(self, space):
        assert cube_of(space.subspace([0, 3]), space) is None

    def test_cube_relative_to_restricted_space(self):
        space = ConfigSpace.full(["c", "f"]).subspace([0, 2, 3])
        cube = cube_of(space.subspace([2, 3]), space)
        assert cube is not None
        assert models(cube, space).configs == frozenset({2, 3})


class TestParsing:
    @pytest.mark.parametrize("text", ["true", "false", "c", "!f", "c & f", "c | !f", "!(c & f)", "c & (f | !c)"])
    def test_parse_format_agree(self, space, text):
        expr = parse_feat_expr(text, space)
        assert parse_feat_expr(format_feat_expr(expr, space), space) == expr

    def test_precedence(self, space):
        assert parse_feat_expr("c | f & !c", space) == Or(Var(0), And(Var(1), Not(Var(0))))

    def test_unknown_feature(self, space):
        with pytest.raises(FeatureExprError, match="Unknown feature"):
            parse_feat_expr("c & g", space)

    @pytest.mark.parametrize("text", ["c &", "(c", "c f", "&", "c $ f"])
    def test_syntax_errors(self, space, text):
        with pytest.raises(FeatureExprError):
            parse_feat_expr(text, space)

    def test_operators_build_expressions(self):
        assert (Var(0) & ~Var(1)) == And(Var(0), Not(Var(1)))
        assert (Var(0) | Var(1)) == Or(Var(0), Var(1))


def random_expr(rng, budget, feature_count=3):
    if budget == 0 or rng.random() < 0.3:
        roll = rng.random()
        if roll < 0.1:
            return TRUE
        if roll < 0.2:
            return FALSE
        return Var(rng.randrange(feature_count))
    op = rng.choice(("not", "and", "or"))
    if op == "not":
        return Not(random_expr(rng, budget - 1, feature_count))
    left, right = random_expr(rng, budget - 1, feature_count), random_expr(rng, budget - 1, feature_count)
    return And(left, right) if op == "and" else Or(left, right)


def random_chain(rng, full):
    """Two nested subspaces k1 <= k2 of full."""
    k2 = full.subspace(k for k in full.configs if rng.random() < 0.7)
    k1 = full.subspace(k for k in k2.configs if rng.random() < 0.5)
    return k1, k2


class TestInvariants:
    # configurations 0..3 over (c, f): {}, {c}, {f}, {c,f}
    @pytest.mark.parametrize("text, table", [
        ("c", [False, True, False, True]),
        ("!f", [True, True, False, False]),
        ("c & f", [False, False, False, True]),
        ("c | f", [False, True, True, True]),
        ("c & !f | !c & f", [False, True, True, False]),
        ("!(c | f)", [True, False, False, False]),
        ("true", [True, True, True, True]),
        ("false", [False, False, False, False]),
    ])
    def test_truth_table(self, space, text, table):
        expr = parse_feat_expr(text, space)
        assert [eval_feat_expr(expr, k) for k in range(4)] == table

    @pytest.mark.parametrize("seed", range(20))
    def test_join_is_monotone(self, seed):
        rng = random.Random(seed)
        full = ConfigSpace.full(["a", "b", "c"])
        for _ in range(50):
            expr = random_expr(rng, 4)
            k1, k2 = random_chain(rng, full)
            assert k1.issubset(k2)
            if alpha_join(expr, k1):
                assert alpha_join(expr, k2)

    @pytest.mark.parametrize("seed", range(20))
    def test_dual_join_is_antitone(self, seed):
        rng = random.Random(seed)
        full = ConfigSpace.full(["a", "b", "c"])
        for _ in range(50):
            expr = random_expr(rng, 4)
            k1, k2 = random_chain(rng, full)
            if alpha_join_dual(expr, k2):
                assert alpha_join_dual(expr, k1)
