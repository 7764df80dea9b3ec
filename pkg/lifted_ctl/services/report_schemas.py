"""
Report schemas for lifted CTL checking
Structured records for check, oracle and bench output, and their text rendering
"""

from typing import Dict, List, Literal, Optional

from pydantic import BaseModel

from ..logic.featexpr import Config, ConfigSpace
from .verify_service import VerifyReport


class VerdictRecord(BaseModel):
    """One verdict subset"""
    configs: List[List[str]]
    verdict: Literal["sat", "viol"]
    cube: Optional[str] = None


class StatsRecord(BaseModel):
    """Engine statistics; elapsed_ms is only filled in when timing is requested"""
    calls: int
    iterations: int
    splits: int
    nodes_built: int
    nodes_reused: int
    elapsed_ms: Optional[float] = None


class TraceRecord(BaseModel):
    """One engine call of the refinement"""
    call: int
    depth: int
    configs: List[str]
    result: str
    nodes_built: int
    nodes_reused: int
    failure_edge: Optional[str] = None
    split_guard: Optional[str] = None


class CheckReport(BaseModel):
    """Result of the check command"""
    formula: str
    features: List[str]
    verdicts: List[VerdictRecord]
    stats: StatsRecord
    trace: Optional[List[TraceRecord]] = None


class OracleRow(BaseModel):
    config: List[str]
    verdict: Literal["sat", "viol"]


class OracleReport(BaseModel):
    """Result of the oracle command"""
    formula: str
    features: List[str]
    rows: List[OracleRow]
    states: Optional[Dict[str, List[str]]] = None


def _config_names(space: ConfigSpace, k: Config) -> List[str]:
    return space.enabled(k)


def build_check_report(report: VerifyReport, timing: bool = False, trace: bool = False) -> CheckReport:
    """Convert a VerifyReport; timing and trace control the optional parts"""
    space = report.space
    verdicts = [
        VerdictRecord(
            configs=[_config_names(space, k) for k in verdict.space],
            verdict=verdict.label,
            cube=report.describe_subset(verdict.space),
        )
        for verdict in report.verdicts
    ]
    stats = report.stats
    stats_record = StatsRecord(
        calls=stats.calls,
        iterations=stats.iterations,
        splits=stats.splits,
        nodes_built=stats.nodes_built,
        nodes_reused=stats.nodes_reused,
        elapsed_ms=round(stats.elapsed_ms, 3) if timing else None,
    )
    trace_records = None
    if trace:
        trace_records = [
            TraceRecord(
                call=r.call,
                depth=r.depth,
                configs=r.configs,
                result=r.result,
                nodes_built=r.nodes_built,
                nodes_reused=r.nodes_reused,
                failure_edge=r.failure_edge,
                split_guard=r.split_guard,
            )
            for r in report.trace
        ]
    return CheckReport(
        formula=report.formula,
        features=[f.name for f in space.features],
        verdicts=verdicts,
        stats=stats_record,
        trace=trace_records,
    )


def build_oracle_report(
    formula: str,
    space: ConfigSpace,
    verdicts: Dict[Config, bool],
    states: Optional[Dict[str, List[str]]] = None
) -> OracleReport:
    rows = [
        OracleRow(config=_config_names(space, k), verdict="sat" if verdicts[k] else "viol")
        for k in sorted(verdicts)
    ]
    return OracleReport(
        formula=formula,
        features=[f.name for f in space.features],
        rows=rows,
        states=states,
    )


def _set_text(configs: List[List[str]]) -> str:
    parts = ["{" + ",".join(names) + "}" if names else "∅" for names in configs]
    return "{" + ", ".join(parts) + "}"


def render_check_text(report: CheckReport) -> str:
    """Human-readable check report"""
    sat = [c for v in report.verdicts if v.verdict == "sat" for c in v.configs]
    viol = [c for v in report.verdicts if v.verdict == "viol" for c in v.configs]
    order = {tuple(c): i for i, c in enumerate(sorted(sat + viol, key=lambda c: _mask(c, report.features)))}
    sat.sort(key=lambda c: order[tuple(c)])
    viol.sort(key=lambda c: order[tuple(c)])

    lines = [f"formula: {report.formula}"]
    total = len(sat) + len(viol)
    if viol:
        lines.append(f"result: violated by {len(viol)} of {total} configurations")
    else:
        lines.append(f"result: satisfied by all {total} configurations")
    lines.append(f"sat = {_set_text(sat)}")
    lines.append(f"viol = {_set_text(viol)}")
    lines.append("verdicts:")
    width = max((len(v.cube or "") for v in report.verdicts), default=0)
    for verdict in report.verdicts:
        cube = (verdict.cube or "").ljust(width)
        lines.append(f"  {verdict.verdict:<4}  {cube}  {_set_text(verdict.configs)}".rstrip())

    stats = report.stats
    stats_line = (
        f"stats: calls={stats.calls} iterations={stats.iterations} splits={stats.splits} "
        f"nodes_built={stats.nodes_built} nodes_reused={stats.nodes_reused}"
    )
    if stats.elapsed_ms is not None:
        stats_line += f" elapsed_ms={stats.elapsed_ms:.3f}"
    lines.append(stats_line)

    if report.trace is not None:
        lines.append("trace:")
        for r in report.trace:
            line = (
                f"  #{r.call} depth={r.depth} {r.result} "
                f"configs={{{', '.join(r.configs)}}} nodes={r.nodes_built} reused={r.nodes_reused}"
            )
            if r.split_guard is not None:
                line += f" split on {r.split_guard} at {r.failure_edge}"
            lines.append(line)
    return "\n".join(lines) + "\n"


def render_oracle_text(report: OracleReport) -> str:
    lines = [f"formula: {report.formula}"]
    width = max((len(_set_text([row.config])) for row in report.rows), default=0)
    for row in report.rows:
        config = "{" + ",".join(row.config) + "}" if row.config else "∅"
        lines.append(f"  {config.ljust(width)}  {'tt' if row.verdict == 'sat' else 'ff'}")
    if report.states is not None:
        lines.append("satisfying states:")
        for config, states in report.states.items():
            lines.append(f"  {config}: {' '.join(states) if states else '-'}")
    return "\n".join(lines) + "\n"


def _mask(names: List[str], features: List[str]) -> int:
    return sum(1 << features.index(name) for name in names)
