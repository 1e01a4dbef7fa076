from .canonical import (
    CanonicalChart,
    ChartDiff,
    ChartEntry,
    canonicalize,
    canonicalize_earley,
    canonicalize_late,
    charts_equal,
    render_chart,
)
from .oracle import brute_force_recognize, minimum_lengths

__all__ = [
    "CanonicalChart",
    "ChartDiff",
    "ChartEntry",
    "canonicalize",
    "canonicalize_earley",
    "canonicalize_late",
    "charts_equal",
    "render_chart",
    "brute_force_recognize",
    "minimum_lengths",
]
