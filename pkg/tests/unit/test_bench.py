"""
Unit tests for the benchmark runner and its tables
"""

import csv
import io

import pytest

from lifted_ctl.bench.generators import MN_ALWAYS, MN_NONZERO, gen_mn
from lifted_ctl.services.bench_service import (
    BenchCase,
    BenchService,
    default_cases,
    format_csv,
    format_table,
    run_bench,
)
from lifted_ctl.services.verify_service import Verdict
from lifted_ctl.utils.errors import InvalidArgumentError, InvariantViolation

pytestmark = pytest.mark.unit


@pytest.fixture
def small_cases():
    """M_2 under both properties."""
    return [
        BenchCase("M_2", MN_ALWAYS, lambda: gen_mn(2)),
        BenchCase("M_2", MN_NONZERO, lambda: gen_mn(2)),
    ]


class TestRunner:
    def test_default_matrix(self):
        cases = default_cases()
        assert [(c.model, c.formula) for c in cases[:2]] == [("M_2", MN_ALWAYS), ("M_2", MN_NONZERO)]
        assert len(cases) == 8
        assert cases[-1].model == "VM"

    def test_call_counts(self, small_cases):
        always, nonzero = run_bench(small_cases)
        assert always.calls == 1
        assert always.violated == 0
        assert nonzero.calls == 5
        assert nonzero.splits == 2
        assert nonzero.violated == 1

    def test_compare_reuse(self, small_cases):
        rows = run_bench(small_cases, compare_reuse=True)
        for row in rows:
            assert row.nodes_built_no_reuse is not None
            assert row.nodes_built <= row.nodes_built_no_reuse

    def test_empty_case_list(self):
        assert run_bench([]) == []
        assert format_table([]) == ""
        assert format_csv([]) == ""

    def test_repeat_must_be_positive(self):
        with pytest.raises(InvalidArgumentError):
            BenchService(repeat=0)

    def test_repeat_runs_verify_repeatedly(self, small_cases, mocker):
        from lifted_ctl.services import bench_service

        spy = mocker.spy(bench_service, "verify")
        BenchService(repeat=3).run(small_cases[:1])
        assert spy.call_count == 3

    def test_reuse_mismatch_stops_the_run(self, small_cases, mocker):
        from lifted_ctl.services import bench_service

        real_verify = bench_service.verify

        def flip_without_reuse(fts, phi, options=None):
            report = real_verify(fts, phi, options=options)
            if not options.reuse:
                report.verdicts = [Verdict(v.space, not v.satisfied) for v in report.verdicts]
            return report

        mocker.patch.object(bench_service, "verify", side_effect=flip_without_reuse)
        with pytest.raises(InvariantViolation, match="AF x_ge_1 on M_2"):
            BenchService(compare_reuse=True).run(small_cases[1:])

    def test_matching_verdicts_pass_compare(self, small_cases):
        rows = BenchService(compare_reuse=True).run(small_cases[1:])
        assert rows[0].time_ms_no_reuse is not None


class TestTables:
    def test_aligned_table(self, small_cases):
        text = format_table(run_bench(small_cases))
        header, *rows = text.splitlines()
        assert header.split()[:3] == ["model", "formula", "configs"]
        assert len(rows) == 2
        assert "no_reuse" not in header

    def test_csv(self, small_cases):
        text = format_csv(run_bench(small_cases, compare_reuse=True))
        records = list(csv.DictReader(io.StringIO(text)))
        assert [r["calls"] for r in records] == ["1", "5"]
        assert records[0]["nodes_built_no_reuse"] != ""
