"""
Unit tests for the abstraction-refinement verifier
"""

import pytest

from lifted_ctl.logic.ctl import parse_formula
from lifted_ctl.models.model_io import load_model, parse_model
from lifted_ctl.services.oracle_service import lifted_check_brute
from lifted_ctl.services.verify_service import VerifyOptions, VerifyService, combine_reports, verify
from lifted_ctl.utils.errors import InvalidArgumentError, InvariantViolation

pytestmark = pytest.mark.unit


class TestVendingMachine:
    def test_all_paths_partition(self, vending, phi1):
        report = verify(vending, phi1)
        assert report.satisfied.describe_all() == "{∅, {f}, {c,f}}"
        assert report.violated.describe_all() == "{{c}}"
        assert not report.all_satisfied

    def test_all_paths_call_counts(self, vending, phi1):
        stats = verify(vending, phi1).stats
        assert stats.calls == 5
        assert stats.iterations == 3
        assert stats.splits == 2

    def test_all_paths_splits_cancel_then_pay(self, vending, phi1):
        trace = verify(vending, phi1).trace
        guards = [record.split_guard for record in trace if record.split_guard is not None]
        assert guards == ["c", "!f"]
        assert trace[0].failure_edge.endswith("via cancel")

    def test_some_path_needs_one_split(self, vending, phi2):
        report = verify(vending, phi2)
        assert report.all_satisfied
        assert report.stats.calls == 3
        assert report.stats.splits == 1
        assert report.trace[0].split_guard == "f"

    def test_trivial_formula(self, vending):
        report = verify(vending, parse_formula("true"))
        assert report.all_satisfied
        assert report.stats.calls == 1

    def test_verdict_subsets_partition_space(self, vending, phi1):
        report = verify(vending, phi1)
        seen = set()
        for verdict in report.verdicts:
            assert not verdict.space.is_empty()
            assert seen.isdisjoint(verdict.space.configs)
            seen |= verdict.space.configs
        assert seen == vending.space.configs

    def test_per_config(self, vending, phi1):
        assert verify(vending, phi1).per_config() == {0: True, 1: False, 2: True, 3: True}

    def test_describe_subset(self, vending, phi1):
        report = verify(vending, phi1)
        cubes = [report.describe_subset(v.space) for v in report.verdicts]
        assert cubes == ["c & !f", "c & f", "!c"]


class TestOptions:
    def test_reuse_does_not_change_verdicts(self, vending, phi1):
        with_reuse = verify(vending, phi1, options=VerifyOptions(reuse=True))
        without = verify(vending, phi1, options=VerifyOptions(reuse=False))
        assert with_reuse.per_config() == without.per_config()
        assert with_reuse.stats.nodes_built < without.stats.nodes_built
        assert without.stats.nodes_reused == 0

    def test_check_reuse_mode(self, vending, phi1):
        report = verify(vending, phi1, options=VerifyOptions(check_reuse=True))
        assert report.violated.describe_all() == "{{c}}"

    def test_dot_dir_gets_one_file_per_call(self, vending, phi1, tmp_path):
        verify(vending, phi1, options=VerifyOptions(dot_dir=tmp_path))
        files = sorted(p.name for p in tmp_path.iterdir())
        assert files == [f"call_{i:03d}.dot" for i in range(1, 6)]

    def test_depth_guard(self, vending, phi1):
        with pytest.raises(InvariantViolation, match="deeper"):
            verify(vending, phi1, options=VerifyOptions(max_depth=0))

    def test_subspace_argument(self, vending, phi1):
        space = vending.space.subspace([0, 2])
        report = VerifyService().verify(vending, phi1, space)
        assert report.all_satisfied
        assert report.stats.calls == 1

    def test_empty_subspace(self, vending, phi1):
        with pytest.raises(InvalidArgumentError):
            verify(vending, phi1, vending.space.subspace([]))

    def test_unknown_proposition_warns(self, vending, mocker):
        warning = mocker.patch("lifted_ctl.services.verify_service.logger.warning")
        report = verify(vending, parse_formula("AG !zzz"))
        assert report.all_satisfied
        warning.assert_called_once()


class TestCombine:
    def test_halves_combine_to_whole(self, vending, phi1):
        yes = verify(vending, phi1, vending.space.subspace([1, 3]))
        no = verify(vending, phi1, vending.space.subspace([0, 2]))
        whole = combine_reports([yes, no])
        assert whole.per_config() == verify(vending, phi1).per_config()
        assert whole.stats.calls == yes.stats.calls + no.stats.calls

    def test_overlap_is_rejected(self, vending, phi1):
        part = verify(vending, phi1, vending.space.subspace([0, 2]))
        with pytest.raises(InvalidArgumentError, match="overlapping"):
            combine_reports([part, part])

    def test_different_formulas_are_rejected(self, vending, phi1, phi2):
        left = verify(vending, phi1, vending.space.subspace([0]))
        right = verify(vending, phi2, vending.space.subspace([1]))
        with pytest.raises(InvalidArgumentError):
            combine_reports([left, right])

    def test_nothing_to_combine(self):
        with pytest.raises(InvalidArgumentError):
            combine_reports([])


class TestSingletons:
    def test_singleton_spaces_are_never_indefinite(self, vending, phi1, phi2):
        for phi in (phi1, phi2):
            for k in vending.space:
                report = verify(vending, phi, vending.space.subspace([k]))
                assert report.stats.calls == 1


class TestRestrictedSpace:
    def test_service_loop_is_split_off(self, elevator_model_path):
        fts = load_model(elevator_model_path)
        report = verify(fts, parse_formula("AF high"))
        assert report.per_config() == {0: True, 1: True, 3: False}
        assert report.violated.describe_all() == "{{p,s}}"
        assert [r.split_guard for r in report.trace if r.split_guard] == ["s"]
        assert report.stats.calls == 3

    def test_agrees_with_oracle(self, elevator_model_path):
        fts = load_model(elevator_model_path)
        for text in ("AF high", "AG EF ground", "EG !parked", "A[ground U high]", "EF parked"):
            phi = parse_formula(text)
            assert verify(fts, phi).per_config() == lifted_check_brute(fts, phi), text


class TestDisjunctiveGuards:
    @pytest.fixture
    def parity(self):
        """s0 reaches r only when c and f agree."""
        return parse_model(
            "features: c f;\n"
            "states: s0* s1;\n"
            "labels: s1: r;\n"
            "trans:\n"
            "  s0 -a[c & f | !c & !f]-> s1;\n"
            "  s0 -b-> s0;\n"
            "  s1 -t-> s1;\n"
        )

    def test_split_on_non_cube_guard(self, parity):
        report = verify(parity, parse_formula("EF r"))
        assert report.per_config() == {0: True, 1: False, 2: False, 3: True}
        assert [r.split_guard for r in report.trace if r.split_guard] == ["c & f | !c & !f"]
        assert report.stats.calls == 3

    @pytest.mark.parametrize("text", ["EF r", "AF r", "AG !r", "E[!r U r]", "EG !r"])
    def test_agrees_with_oracle(self, parity, text):
        phi = parse_formula(text)
        assert verify(parity, phi).per_config() == lifted_check_brute(parity, phi)
