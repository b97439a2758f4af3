"""
Core module — производящие функции тремя методами, наборы проверок, отчёты.
"""

from core.models import (
    MethodUnavailableError,
    GenfunKind,
    Method,
    Suite,
    CheckStatus,
    VerifyRecord,
    VerifyReport,
)
from core.genfun import GenfunQuery, compute_genfun, query_from_row
from core.verify import build_tasks, run_suite
from core.report import (
    weight_table,
    coefficient_table,
    verify_table,
    batch_genfun,
    dataframe_to_markdown,
    write_table,
)

__all__ = [
    # Models
    "MethodUnavailableError",
    "GenfunKind",
    "Method",
    "Suite",
    "CheckStatus",
    "VerifyRecord",
    "VerifyReport",
    # Genfun
    "GenfunQuery",
    "compute_genfun",
    "query_from_row",
    # Verify
    "build_tasks",
    "run_suite",
    # Report
    "weight_table",
    "coefficient_table",
    "verify_table",
    "batch_genfun",
    "dataframe_to_markdown",
    "write_table",
]
