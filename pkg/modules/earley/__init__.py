from .chart import EarleyChart, Item
from .parser import (
    earley_complete,
    earley_dispatch,
    earley_parse,
    earley_predict,
    earley_recognize,
    earley_scan,
    fill_chart,
    seed_chart,
)

__all__ = [
    "EarleyChart",
    "Item",
    "earley_complete",
    "earley_dispatch",
    "earley_parse",
    "earley_predict",
    "earley_recognize",
    "earley_scan",
    "fill_chart",
    "seed_chart",
]
