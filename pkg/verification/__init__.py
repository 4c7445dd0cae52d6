"""
Binrec Verification

Registry of cross-pipeline invariant checks and the report objects the
`verify` command serializes.
"""

from verification.checks import (
    ALL_CHECKS,
    CheckParams,
    get_check,
    list_checks,
    run_check,
)
from verification.report import CheckResult, CheckStatus, Report

__all__ = [
    # Registry
    "ALL_CHECKS",
    "CheckParams",
    "get_check",
    "list_checks",
    "run_check",
    # Reports
    "CheckStatus",
    "CheckResult",
    "Report",
]
