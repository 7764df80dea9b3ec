"""
Lifted CTL Services Module
Verification, oracle, benchmark and report layer
"""

from .verify_service import VerifyOptions, VerifyReport, VerifyService, combine_reports, verify
from .oracle_service import FixpointLabeler, check_ts, lifted_check_brute, satisfying_states
from .bench_service import BenchCase, BenchRow, BenchService, default_cases, run_bench
from .report_schemas import CheckReport, OracleReport, build_check_report, build_oracle_report

__all__ = [
    'VerifyOptions',
    'VerifyReport',
    'VerifyService',
    'combine_reports',
    'verify',
    'FixpointLabeler',
    'check_ts',
    'lifted_check_brute',
    'satisfying_states',
    'BenchCase',
    'BenchRow',
    'BenchService',
    'default_cases',
    'run_bench',
    'CheckReport',
    'OracleReport',
    'build_check_report',
    'build_oracle_report',
]
