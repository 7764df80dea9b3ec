"""
Bench Service for lifted CTL checking
Runs verify over a model/formula matrix and tabulates calls and wall time
"""

import csv
import io
import logging
import statistics
import time
from dataclasses import dataclass, fields
from typing import Callable, List, Optional, Sequence

from ..bench.generators import (
    MN_ALWAYS,
    MN_NONZERO,
    VENDING_ALL_PATHS,
    VENDING_SOME_PATH,
    gen_mn,
    gen_vending_machine,
)
from ..logic.ctl import parse_formula
from ..models.transition_systems import Fts
from ..utils.config import BENCH_REPEAT
from ..utils.errors import InvalidArgumentError, InvariantViolation
from .verify_service import VerifyOptions, VerifyReport, verify

logger = logging.getLogger('lifted_ctl.bench')


@dataclass(frozen=True)
class BenchCase:
    """One row of the benchmark matrix; build is called once per case"""
    model: str
    formula: str
    build: Callable[[], Fts]


@dataclass
class BenchRow:
    model: str
    formula: str
    configs: int
    violated: int
    calls: int
    iterations: int
    splits: int
    nodes_built: int
    nodes_reused: int
    time_ms: float
    nodes_built_no_reuse: Optional[int] = None
    time_ms_no_reuse: Optional[float] = None


def default_cases(sizes: Sequence[int] = (2, 7, 10)) -> List[BenchCase]:
    """M_n for each size under both properties, then the vending machine"""
    cases: List[BenchCase] = []
    for n in sizes:
        for formula in (MN_ALWAYS, MN_NONZERO):
            cases.append(BenchCase(f"M_{n}", formula, lambda n=n: gen_mn(n)))
    for formula in (VENDING_ALL_PATHS, VENDING_SOME_PATH):
        cases.append(BenchCase("VM", formula, gen_vending_machine))
    return cases


class BenchService:
    """Sequential benchmark runner; timings are medians over repeat runs"""

    def __init__(self, repeat: int = BENCH_REPEAT, compare_reuse: bool = False):
        if repeat < 1:
            raise InvalidArgumentError(f"repeat must be at least 1, got {repeat}")
        self.repeat = repeat
        self.compare_reuse = compare_reuse

    def _timed(self, fts: Fts, case: BenchCase, reuse: bool) -> tuple:
        phi = parse_formula(case.formula)
        times: List[float] = []
        report: Optional[VerifyReport] = None
        for _ in range(self.repeat):
            start = time.perf_counter()
            report = verify(fts, phi, options=VerifyOptions(reuse=reuse))
            times.append((time.perf_counter() - start) * 1000)
        return report, statistics.median(times)

    def run_case(self, case: BenchCase) -> BenchRow:
        fts = case.build()
        report, elapsed = self._timed(fts, case, reuse=True)
        row = BenchRow(
            model=case.model,
            formula=case.formula,
            configs=len(report.space),
            violated=len(report.violated),
            calls=report.stats.calls,
            iterations=report.stats.iterations,
            splits=report.stats.splits,
            nodes_built=report.stats.nodes_built,
            nodes_reused=report.stats.nodes_reused,
            time_ms=elapsed,
        )
        if self.compare_reuse:
            plain, plain_elapsed = self._timed(fts, case, reuse=False)
            if plain.per_config() != report.per_config():
                logger.error("Reuse changed the verdicts", extra={'model': case.model, 'formula': case.formula})
                raise InvariantViolation(
                    f"Reuse changed the verdicts of {case.formula} on {case.model}"
                )
            row.nodes_built_no_reuse = plain.stats.nodes_built
            row.time_ms_no_reuse = plain_elapsed
        logger.info(
            "Bench row",
            extra={'model': row.model, 'formula': row.formula, 'calls': row.calls, 'time_ms': round(row.time_ms, 3)}
        )
        return row

    def run(self, cases: Sequence[BenchCase]) -> List[BenchRow]:
        return [self.run_case(case) for case in cases]


def run_bench(
    cases: Optional[Sequence[BenchCase]] = None,
    repeat: int = BENCH_REPEAT,
    compare_reuse: bool = False
) -> List[BenchRow]:
    return BenchService(repeat, compare_reuse).run(default_cases() if cases is None else cases)


def _columns(rows: Sequence[BenchRow]) -> List[str]:
    names = [f.name for f in fields(BenchRow)]
    if not any(row.nodes_built_no_reuse is not None for row in rows):
        names = [n for n in names if not n.endswith("_no_reuse")]
    return names


def _cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        return f"{value:.3f}"
    return str(value)


def format_table(rows: Sequence[BenchRow]) -> str:
    """Aligned text table; an empty row list gives an empty string"""
    if not rows:
        return ""
    columns = _columns(rows)
    cells = [columns] + [[_cell(getattr(row, c)) for c in columns] for row in rows]
    widths = [max(len(line[i]) for line in cells) for i in range(len(columns))]
    lines = ["  ".join(value.ljust(width) for value, width in zip(line, widths)).rstrip() for line in cells]
    return "\n".join(lines) + "\n"


def format_csv(rows: Sequence[BenchRow]) -> str:
    if not rows:
        return ""
    columns = _columns(rows)
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([_cell(getattr(row, c)) for c in columns])
    return buffer.getvalue()
