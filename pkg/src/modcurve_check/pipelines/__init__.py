"""Verification suites, the quadratic-point table and report output."""

from .common import Check, CheckResult, SuiteConfig, report_dict, run_checks, summary_counts, write_report
from .x13 import run_x1_13

__all__ = [
    "Check",
    "CheckResult",
    "SuiteConfig",
    "report_dict",
    "run_checks",
    "run_x1_13",
    "summary_counts",
    "write_report",
]
