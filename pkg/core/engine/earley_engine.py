from typing import Callable

from core.exceptions import EarleyRejectionError
from modules.earley import EarleyChart, earley_recognize, fill_chart, seed_chart
from modules.grammar import Grammar, Sentence, validate_for_earley
from modules.verify.canonical import CanonicalChart, canonicalize_earley
from .base import BaseEngine, EngineName


class EarleyEngine(BaseEngine):
    name = EngineName.EARLEY

    def prepare(self, g: Grammar, w: Sentence) -> Callable[[], EarleyChart]:
        validation = validate_for_earley(g)
        if not validation.ok:
            raise EarleyRejectionError(validation.offending)
        chart = seed_chart(g, w)
        return lambda: fill_chart(chart, g, w)

    def recognize(self, chart: EarleyChart, g: Grammar, w: Sentence) -> bool:
        return earley_recognize(chart, g, w)

    def canonical(self, chart: EarleyChart) -> CanonicalChart:
        return canonicalize_earley(chart)
