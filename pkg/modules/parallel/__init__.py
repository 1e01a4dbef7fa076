from .schemas import ParallelConfig
from .tables import (
    ConcurrentGlobalChart,
    ConcurrentParseTables,
    atomic_complete_claim,
    atomic_request_register,
)
from .runtime import (
    allocate,
    late_parse_parallel,
    late_parse_parallel_with_tables,
    make_pool,
    physical_cores,
    run_workers,
)

__all__ = [
    "ParallelConfig",
    "ConcurrentGlobalChart",
    "ConcurrentParseTables",
    "atomic_complete_claim",
    "atomic_request_register",
    "late_parse_parallel",
    "late_parse_parallel_with_tables",
    "physical_cores",
    "allocate",
    "make_pool",
    "run_workers",
]
