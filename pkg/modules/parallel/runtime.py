import logging
import os
from concurrent.futures import ThreadPoolExecutor
from typing import Optional

import psutil

from core.exceptions import ParallelParseError
from modules.grammar.schemas import Grammar, Sentence
from modules.late.parser import late_dispatch, seed_chart
from modules.late.schemas import GlobalChart
from .schemas import ParallelConfig
from .tables import ConcurrentGlobalChart, ConcurrentParseTables

logger = logging.getLogger(__name__)


def physical_cores() -> int:
    """Physical core count of the host, or logical count when unknown."""
    return psutil.cpu_count(logical=False) or os.cpu_count() or 1


def _worker_loop(g: Grammar, w: Sentence, chart: ConcurrentGlobalChart, tables: ConcurrentParseTables, batch_size: int) -> None:
    while True:
        batch = chart.take(batch_size)
        if not batch:
            return
        try:
            for item in batch:
                late_dispatch(item, g, w, chart, tables)
        except BaseException:
            chart.abort()
            raise
        finally:
            chart.task_done(len(batch))


def allocate(cfg: ParallelConfig) -> tuple[ConcurrentGlobalChart, ConcurrentParseTables]:
    return ConcurrentGlobalChart(cfg.queue_policy, cfg.seed), ConcurrentParseTables()


def make_pool(cfg: ParallelConfig) -> ThreadPoolExecutor:
    # Threads start lazily on the first submit
    return ThreadPoolExecutor(max_workers=cfg.workers, thread_name_prefix="late-worker")


def run_workers(
    g: Grammar,
    w: Sentence,
    cfg: ParallelConfig,
    chart: ConcurrentGlobalChart,
    tables: ConcurrentParseTables,
    pool: Optional[ThreadPoolExecutor] = None,
) -> ConcurrentGlobalChart:
    """Drain a seeded chart with `cfg.workers` threads until quiescent; shuts `pool` down."""
    with pool or make_pool(cfg) as executor:
        futures = [
            executor.submit(_worker_loop, g, w, chart, tables, cfg.batch_size)
            for _ in range(cfg.workers)
        ]
        failures = [exc for future in futures if (exc := future.exception()) is not None]

    if failures:
        logger.error("Parallel parse aborted", extra={"workers": cfg.workers, "failures": len(failures)})
        raise ParallelParseError(f"worker failed: {failures[0]!r}") from failures[0]

    logger.debug(
        "Parallel LATE parse finished",
        extra={"workers": cfg.workers, "items": len(chart), "dispatches": chart.dispatches},
    )
    return chart


def late_parse_parallel_with_tables(
    g: Grammar, w: Sentence, cfg: ParallelConfig
) -> tuple[ConcurrentGlobalChart, ConcurrentParseTables]:
    chart, tables = allocate(cfg)
    seed_chart(g, chart)
    run_workers(g, w, cfg, chart, tables)
    return chart, tables


def late_parse_parallel(g: Grammar, w: Sentence, cfg: ParallelConfig) -> GlobalChart:
    """
    LATE over a shared work queue drained by `cfg.workers` threads.

    The final item set equals the serial engine's for every worker count
    and queue policy. Speedup needs a free-threaded interpreter; with the
    GIL the result is identical but the threads take turns.
    """
    chart, _ = late_parse_parallel_with_tables(g, w, cfg)
    return chart
