from .queue import QueuePolicy, WorkQueue
from .schemas import GlobalChart, LateItem, ParseTables
from .parser import (
    drain,
    late_complete,
    late_dispatch,
    late_parse,
    late_parse_with_tables,
    late_predict,
    late_recognize,
    late_scan,
    seed_chart,
)

__all__ = [
    "QueuePolicy",
    "WorkQueue",
    "GlobalChart",
    "LateItem",
    "ParseTables",
    "drain",
    "late_complete",
    "late_dispatch",
    "late_parse",
    "late_parse_with_tables",
    "late_predict",
    "late_recognize",
    "late_scan",
    "seed_chart",
]
