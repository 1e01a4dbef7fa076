import csv
import logging
import time
from typing import Iterable, Optional, Sequence, TextIO

from pydantic import BaseModel

from core.config import settings
from core.engine import BaseEngine, EngineFactory, EngineName, LateEngine
from core.exceptions import LateChartError
from modules.grammar import (
    Grammar,
    Sentence,
    load_grammar,
    load_sentences,
    replicate_nonterminals,
    tokenize,
    wrap_wildcard,
)
from modules.parallel import ParallelConfig
from .metrics import compute_efficiency
from .schemas import (
    CSV_HEADER,
    MIN_TOTAL_SECONDS,
    MIN_TRIALS,
    BenchResult,
    BenchRow,
    Metrics,
    SerialScalingRow,
    SuiteGrammar,
    SuiteSentence,
    SuiteSpec,
    SweepRow,
    WeakScalingRow,
)
from .weak_scaling import build_weak_scaling_series

logger = logging.getLogger(__name__)


def measure_runtime(
    engine: BaseEngine | str,
    g: Grammar,
    w: Sentence,
    cfg: Optional[ParallelConfig] = None,
    *,
    grammar_id: str = "grammar",
    sentence_id: str = "sentence",
    warmup: Optional[int] = None,
) -> BenchResult:
    """
    Time chart construction only, for 100 trials or until the total passes
    one second, whichever comes first.

    Setup done by `engine.prepare` (validation, grammar indexing, chart and
    table allocation, seeding, thread pool construction) stays outside the
    timed region. The worker count recorded is the one the engine ran with.
    """
    cfg = cfg or ParallelConfig()
    if not isinstance(engine, BaseEngine):
        engine = EngineFactory.get_engine(engine, cfg)
    warmup = settings.bench_warmup_runs if warmup is None else warmup

    # Verification run; also surfaces engine rejections before timing
    chart_items = len(engine.parse(g, w))

    for _ in range(warmup):
        engine.parse(g, w)

    trials = 0
    total = 0.0
    while trials < MIN_TRIALS and total < MIN_TOTAL_SECONDS:
        run = engine.prepare(g, w)
        started = time.perf_counter()
        run()
        total += time.perf_counter() - started
        trials += 1

    return BenchResult(
        engine=engine.name,
        workers=engine.workers,
        trials=trials,
        total_time=total,
        mean_time=total / trials,
        chart_items=chart_items,
        grammar_id=grammar_id,
        sentence_id=sentence_id,
        processors=engine.processors,
    )


def _cells(suite: SuiteSpec) -> list[tuple[EngineName, int]]:
    cells = []
    for engine in suite.engines:
        if engine is EngineName.LATE_PARALLEL:
            cells += [(engine, p) for p in suite.workers]
        else:
            cells.append((engine, 1))
    return cells


def _usable(row: Optional[BenchRow]) -> bool:
    return row is not None and row.error is None and row.mean_s > 0 and row.chart_items > 0


def _derive(rows: list[BenchRow]) -> None:
    """Fill speedup and efficiency columns within one (grammar, sentence) group."""
    baseline = {row.engine: row for row in rows if row.engine is not EngineName.LATE_PARALLEL}
    earley = baseline.get(EngineName.EARLEY)
    serial = baseline.get(EngineName.LATE_SERIAL)
    earley_s = earley.mean_s if _usable(earley) else None
    serial_s = serial.mean_s if _usable(serial) else None
    serial_efficiency = (
        compute_efficiency(serial.chart_items, serial.processors, serial.mean_s) if _usable(serial) else None
    )

    for row in rows:
        if _usable(row):
            row.apply(
                Metrics.derive(
                    row.chart_items,
                    row.processors,
                    row.mean_s,
                    earley_s=earley_s,
                    serial_s=serial_s,
                    serial_efficiency=serial_efficiency,
                )
            )


def _prepare_grammar(suite: SuiteSpec, entry: SuiteGrammar) -> Grammar:
    g = load_grammar(suite.resolve(entry.path))
    if entry.replicate > 1:
        g = replicate_nonterminals(g, entry.replicate)
    if entry.wrap:
        g = wrap_wildcard(g)
    return g


def _suite_grammars(suite: SuiteSpec) -> dict[str, Grammar | str]:
    """Grammar per id, or the error message when it failed to load."""
    grammars: dict[str, Grammar | str] = {}
    for entry in suite.grammars:
        try:
            grammars[entry.id] = _prepare_grammar(suite, entry)
        except (LateChartError, OSError) as exc:
            logger.warning("Suite grammar failed", extra={"grammar": entry.id, "error": str(exc)})
            grammars[entry.id] = str(exc)
    return grammars


def _suite_sentences(suite: SuiteSpec, entry: SuiteSentence, g: Grammar | str) -> list[tuple[str, Sentence | str]]:
    """(sentence id, sentence or error message) pairs for one suite entry."""
    if isinstance(g, str):
        return [(entry.id, f"grammar {entry.grammar!r} unavailable: {g}")]
    try:
        if entry.text is not None:
            sentences = [tokenize(entry.text, g)]
        else:
            sentences = load_sentences(suite.resolve(entry.path), g)
    except (LateChartError, OSError) as exc:
        logger.warning("Suite sentence failed", extra={"sentence": entry.id, "error": str(exc)})
        return [(entry.id, str(exc))]
    if len(sentences) == 1:
        return [(entry.id, sentences[0])]
    return [(f"{entry.id}#{index}", w) for index, w in enumerate(sentences)]


def _measure_cell(
    engine: EngineName, workers: int, g: Grammar, w: Sentence, grammar_id: str, sentence_id: str, warmup: Optional[int]
) -> BenchRow:
    try:
        result = measure_runtime(
            engine,
            g,
            w,
            ParallelConfig(workers=workers),
            grammar_id=grammar_id,
            sentence_id=sentence_id,
            warmup=warmup,
        )
    except LateChartError as exc:
        logger.warning(
            "Benchmark cell failed",
            extra={"engine": engine.value, "workers": workers, "sentence": sentence_id, "error": str(exc)},
        )
        return BenchRow(engine=engine, workers=workers, grammar_id=grammar_id, sentence_id=sentence_id, error=str(exc))

    logger.info(
        "Benchmark cell finished",
        extra={"engine": engine.value, "workers": workers, "sentence": sentence_id, "mean_s": result.mean_time},
    )
    return BenchRow.from_result(result)


def run_benchmark_suite(suite: SuiteSpec, *, warmup: Optional[int] = None) -> list[BenchRow]:
    """
    One row per (engine, workers, grammar, sentence) cell, plus speedups
    against serial Earley and serial LATE. A failing cell, or a grammar or
    sentence that cannot be loaded, is recorded in the `error` column of
    the affected rows and the suite moves on.
    """
    grammars = _suite_grammars(suite)
    rows: list[BenchRow] = []

    for sentence_entry in suite.sentences:
        grammar_id = sentence_entry.grammar
        g = grammars[grammar_id]
        for sentence_id, w in _suite_sentences(suite, sentence_entry, g):
            if isinstance(w, str):
                rows += [
                    BenchRow(engine=engine, workers=workers, grammar_id=grammar_id, sentence_id=sentence_id, error=w)
                    for engine, workers in _cells(suite)
                ]
                continue
            group = [_measure_cell(engine, workers, g, w, grammar_id, sentence_id, warmup) for engine, workers in _cells(suite)]
            _derive(group)
            rows += group

    return rows


def run_ambiguity_sweep(
    seed_grammar: Grammar,
    replicas: Sequence[int],
    w: Sentence,
    cfg: Optional[ParallelConfig] = None,
    *,
    engine: EngineName | str = EngineName.LATE_PARALLEL,
    sentence_id: str = "sentence",
    warmup: Optional[int] = None,
) -> list[SweepRow]:
    """Items per second as replication grows, at fixed workers and sentence."""
    cfg = cfg or ParallelConfig()
    rows = []
    for m in replicas:
        g = replicate_nonterminals(seed_grammar, m)
        result = measure_runtime(
            engine, g, w, cfg, grammar_id=f"replicas={m}", sentence_id=sentence_id, warmup=warmup
        )
        rows.append(
            SweepRow(
                replicas=m,
                engine=result.engine,
                workers=result.workers,
                sentence_id=sentence_id,
                trials=result.trials,
                mean_s=result.mean_time,
                chart_items=result.chart_items,
                items_per_s=result.chart_items / result.mean_time,
            )
        )
        logger.info("Sweep point finished", extra={"replicas": m, "chart_items": result.chart_items})
    return rows


def run_serial_scaling(
    g: Grammar, w: Sentence, prefix_lengths: Sequence[int], *, warmup: Optional[int] = None
) -> list[SerialScalingRow]:
    """Serial LATE time per prefix against linear extrapolation from the smallest one."""
    engine = LateEngine()
    rows: list[SerialScalingRow] = []
    for length in sorted(prefix_lengths):
        result = measure_runtime(engine, g, w.prefix(length), warmup=warmup)
        if rows:
            base = rows[0]
            expected = base.mean_s * result.chart_items / base.chart_items
        else:
            expected = result.mean_time
        rows.append(
            SerialScalingRow(
                prefix_length=length,
                chart_items=result.chart_items,
                mean_s=result.mean_time,
                expected_s=expected,
            )
        )
    return rows


def run_weak_scaling(
    g: Grammar,
    w: Sentence,
    base_items: int,
    max_workers: int,
    cfg: Optional[ParallelConfig] = None,
    *,
    warmup: Optional[int] = None,
) -> list[WeakScalingRow]:
    """
    Parallel LATE at p workers on the prefix of `w` closest to p * base_items
    chart items, for p = 1..max_workers.

    Serial LATE is timed on the same prefix, so `efficiency_vs_serial`
    factors out the superlinear growth of serial cost with input size.
    """
    cfg = cfg or ParallelConfig()
    serial_engine = LateEngine(cfg.queue_policy, cfg.seed)
    rows = []
    for p, prefix in build_weak_scaling_series(g, w, base_items, max_workers):
        sentence_id = f"prefix={prefix.length}"
        serial = measure_runtime(serial_engine, g, prefix.sentence, sentence_id=sentence_id, warmup=warmup)
        parallel = measure_runtime(
            EngineName.LATE_PARALLEL,
            g,
            prefix.sentence,
            cfg.model_copy(update={"workers": p}),
            sentence_id=sentence_id,
            warmup=warmup,
        )
        serial_efficiency = compute_efficiency(serial.chart_items, serial.processors, serial.mean_time)
        metrics = Metrics.derive(
            parallel.chart_items, parallel.processors, parallel.mean_time, serial_efficiency=serial_efficiency
        )
        rows.append(
            WeakScalingRow(
                workers=p,
                processors=parallel.processors,
                target_items=prefix.target,
                prefix_length=prefix.length,
                chart_items=parallel.chart_items,
                mean_s=parallel.mean_time,
                serial_mean_s=serial.mean_time,
                efficiency=metrics.efficiency,
                serial_efficiency=serial_efficiency,
                efficiency_vs_serial=metrics.efficiency_vs_serial,
            )
        )
        logger.info(
            "Weak scaling point finished",
            extra={"workers": p, "chart_items": parallel.chart_items, "efficiency_vs_serial": metrics.efficiency_vs_serial},
        )
    return rows


def write_csv(rows: Iterable[BaseModel], stream: TextIO, header: Sequence[str] = CSV_HEADER) -> None:
    writer = csv.DictWriter(stream, fieldnames=list(header), lineterminator="\n")
    writer.writeheader()
    for row in rows:
        record = row.model_dump(mode="json")
        writer.writerow({key: "" if record.get(key) is None else record[key] for key in header})
