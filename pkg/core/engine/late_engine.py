from typing import Callable, Optional

from modules.grammar import Grammar, Sentence
from modules.late import GlobalChart, ParseTables, QueuePolicy, drain, late_recognize, seed_chart
from modules.parallel import ParallelConfig, allocate, make_pool, physical_cores, run_workers
from modules.verify.canonical import CanonicalChart, canonicalize_late
from .base import BaseEngine, EngineName


class LateEngine(BaseEngine):
    name = EngineName.LATE_SERIAL

    def __init__(self, policy: QueuePolicy = QueuePolicy.FIFO, seed: Optional[int] = None):
        self.policy = policy
        self.seed = seed

    def prepare(self, g: Grammar, w: Sentence) -> Callable[[], GlobalChart]:
        chart = GlobalChart(self.policy, self.seed)
        tables = ParseTables()
        seed_chart(g, chart)
        return lambda: drain(chart, tables, g, w)

    def recognize(self, chart: GlobalChart, g: Grammar, w: Sentence) -> bool:
        return late_recognize(chart, w)

    def canonical(self, chart: GlobalChart) -> CanonicalChart:
        return canonicalize_late(chart)


class ParallelLateEngine(LateEngine):
    name = EngineName.LATE_PARALLEL

    def __init__(self, config: ParallelConfig):
        super().__init__(config.queue_policy, config.seed)
        self.config = config

    def prepare(self, g: Grammar, w: Sentence) -> Callable[[], GlobalChart]:
        chart, tables = allocate(self.config)
        seed_chart(g, chart)
        pool = make_pool(self.config)
        return lambda: run_workers(g, w, self.config, chart, tables, pool)

    @property
    def workers(self) -> int:
        return self.config.workers

    @property
    def processors(self) -> int:
        # Hyperthreads do not count: 10 cores running 20 threads is p = 10
        return min(self.config.workers, physical_cores())
