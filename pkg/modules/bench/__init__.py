from .schemas import (
    CSV_HEADER,
    MIN_TOTAL_SECONDS,
    MIN_TRIALS,
    SERIAL_SCALING_HEADER,
    SWEEP_HEADER,
    WEAK_SCALING_HEADER,
    BenchResult,
    BenchRow,
    Metrics,
    SerialScalingRow,
    SuiteSpec,
    SweepRow,
    WeakScalingRow,
)
from .metrics import compute_efficiency, compute_speedup
from .runner import (
    measure_runtime,
    run_ambiguity_sweep,
    run_benchmark_suite,
    run_serial_scaling,
    run_weak_scaling,
    write_csv,
)
from .weak_scaling import (
    WeakScalingPrefix,
    build_weak_scaling_series,
    chart_items,
    check_monotonic,
    find_weak_scaling_prefix,
)

__all__ = [
    "CSV_HEADER",
    "MIN_TOTAL_SECONDS",
    "MIN_TRIALS",
    "SERIAL_SCALING_HEADER",
    "SWEEP_HEADER",
    "WEAK_SCALING_HEADER",
    "BenchResult",
    "BenchRow",
    "Metrics",
    "SerialScalingRow",
    "SuiteSpec",
    "SweepRow",
    "WeakScalingRow",
    "compute_efficiency",
    "compute_speedup",
    "measure_runtime",
    "run_ambiguity_sweep",
    "run_benchmark_suite",
    "run_serial_scaling",
    "run_weak_scaling",
    "write_csv",
    "WeakScalingPrefix",
    "build_weak_scaling_series",
    "chart_items",
    "check_monotonic",
    "find_weak_scaling_prefix",
]
