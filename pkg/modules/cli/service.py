import argparse
import io
import logging
import sys
from pathlib import Path
from typing import Optional

from core.config import Settings
from core.engine import EngineFactory
from modules.bench import (
    SERIAL_SCALING_HEADER,
    SWEEP_HEADER,
    WEAK_SCALING_HEADER,
    SuiteSpec,
    find_weak_scaling_prefix,
    run_ambiguity_sweep,
    run_benchmark_suite,
    run_serial_scaling,
    run_weak_scaling,
    write_csv,
)
from modules.grammar import (
    Grammar,
    Sentence,
    load_grammar,
    load_sentences,
    replicate_nonterminals,
    serialize_grammar,
    tokenize,
    wrap_wildcard,
)
from modules.parallel import ParallelConfig
from modules.verify import render_chart
from modules.verify.service import verify_directory
from .schemas import CliConfig

EXIT_OK = 0
EXIT_FALSE = 1

logger = logging.getLogger(__name__)


def _emit(text: str, output: Optional[str]) -> None:
    if output:
        Path(output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _sentence_text(w: Sentence) -> str:
    return str(w) if len(w) else "EPSILON"


def _sentences(config: CliConfig, g: Grammar) -> list[Sentence]:
    if config.sentence is not None:
        if config.sentence_path is not None:
            logger.warning("Both -s and -S given; using the inline sentence", extra={"sentence_path": config.sentence_path})
        return [tokenize(config.sentence, g)]
    if config.sentence_path is not None:
        return load_sentences(config.sentence_path, g)
    raise ValueError("a sentence is required: pass -s TEXT or -S PATH")


def _first_sentence(config: CliConfig, g: Grammar) -> Sentence:
    sentences = _sentences(config, g)
    if not sentences:
        raise ValueError(f"no sentences in {config.sentence_path}")
    return sentences[0]


def _parallel_config(config: CliConfig, settings: Settings) -> ParallelConfig:
    return ParallelConfig(
        workers=settings.resolve_workers(config.workers),
        queue_policy=config.queue_policy or settings.queue_policy,
        seed=config.seed if config.seed is not None else settings.queue_seed,
        batch_size=settings.batch_size,
    )


def _config(args: argparse.Namespace) -> CliConfig:
    return CliConfig(**{key: value for key, value in vars(args).items() if key in CliConfig.model_fields})


def recognize_command(args: argparse.Namespace, settings: Settings) -> int:
    config = _config(args)
    g = load_grammar(config.grammar_path)
    engine = EngineFactory.get_engine(config.engine, _parallel_config(config, settings))

    verdicts = []
    for w in _sentences(config, g):
        verdicts.append(engine.recognize(engine.parse(g, w), g, w))
    _emit("".join(f"{str(v).lower()}\n" for v in verdicts), config.output)
    return EXIT_OK if all(verdicts) else EXIT_FALSE


def chart_command(args: argparse.Namespace, settings: Settings) -> int:
    config = _config(args)
    g = load_grammar(config.grammar_path)
    engine = EngineFactory.get_engine(config.engine, _parallel_config(config, settings))

    dumps = [render_chart(engine.canonical(engine.parse(g, w))) for w in _sentences(config, g)]
    _emit("\n".join(dumps), config.output)
    return EXIT_OK


def verify_command(args: argparse.Namespace, settings: Settings) -> int:
    workers = [settings.workers] if settings.workers is not None else args.workers_list
    reports = verify_directory(args.directory, workers, args.repetitions)
    _emit("".join(f"{report.render()}\n" for report in reports), args.output)
    return EXIT_OK if all(report.passed for report in reports) else EXIT_FALSE


def bench_command(args: argparse.Namespace, settings: Settings) -> int:
    suite = SuiteSpec.load_from_yaml(args.suite)
    if settings.workers is not None:
        suite = suite.model_copy(update={"workers": [settings.workers]})
    rows = run_benchmark_suite(suite)
    buffer = io.StringIO()
    write_csv(rows, buffer)
    _emit(buffer.getvalue(), args.output)
    return EXIT_OK


def sweep_command(args: argparse.Namespace, settings: Settings) -> int:
    config = _config(args)
    g = load_grammar(config.grammar_path)
    w = _first_sentence(config, g)
    rows = run_ambiguity_sweep(
        g,
        args.replicas,
        w,
        _parallel_config(config, settings),
        engine=config.engine,
        sentence_id=Path(config.sentence_path).stem if config.sentence is None else "inline",
    )
    buffer = io.StringIO()
    write_csv(rows, buffer, SWEEP_HEADER)
    _emit(buffer.getvalue(), config.output)
    return EXIT_OK


def replicate_command(args: argparse.Namespace, settings: Settings) -> int:
    g = replicate_nonterminals(load_grammar(args.grammar_path), args.m, cap=settings.replication_cap)
    _emit(serialize_grammar(g), args.output)
    return EXIT_OK


def wrap_command(args: argparse.Namespace, settings: Settings) -> int:
    _emit(serialize_grammar(wrap_wildcard(load_grammar(args.grammar_path))), args.output)
    return EXIT_OK


def weak_input_command(args: argparse.Namespace, settings: Settings) -> int:
    config = _config(args)
    g = load_grammar(config.grammar_path)
    w = _first_sentence(config, g)
    prefix = find_weak_scaling_prefix(g, w, args.target, verify_monotonic=not args.skip_monotonic_check)
    logger.info(
        "Weak scaling input written",
        extra={"length": prefix.length, "chart_items": prefix.chart_items, "residual": prefix.residual},
    )
    _emit(f"{_sentence_text(prefix.sentence)}\n", config.output)
    return EXIT_OK


def weak_scaling_command(args: argparse.Namespace, settings: Settings) -> int:
    config = _config(args)
    g = load_grammar(config.grammar_path)
    w = _first_sentence(config, g)
    rows = run_weak_scaling(
        g,
        w,
        args.base_items,
        args.max_workers,
        _parallel_config(config, settings),
        warmup=settings.bench_warmup_runs,
    )
    buffer = io.StringIO()
    write_csv(rows, buffer, WEAK_SCALING_HEADER)
    _emit(buffer.getvalue(), config.output)
    return EXIT_OK


def serial_scaling_command(args: argparse.Namespace, settings: Settings) -> int:
    config = _config(args)
    g = load_grammar(config.grammar_path)
    w = _first_sentence(config, g)
    too_long = [length for length in args.lengths if length > len(w)]
    if too_long:
        raise ValueError(f"prefix lengths {too_long} exceed the sentence length {len(w)}")
    rows = run_serial_scaling(g, w, args.lengths, warmup=settings.bench_warmup_runs)
    buffer = io.StringIO()
    write_csv(rows, buffer, SERIAL_SCALING_HEADER)
    _emit(buffer.getvalue(), config.output)
    return EXIT_OK
