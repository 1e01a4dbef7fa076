import argparse
import logging
import sys
from typing import Optional, Sequence

from pydantic import ValidationError

from core.config import Settings
from core.exceptions import LateChartError
from utils.logger import setup_logging
from . import service

EXIT_USAGE = 2

logger = logging.getLogger(__name__)


def _int_list(text: str) -> list[int]:
    try:
        values = [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None
    if not values or any(v < 1 for v in values):
        raise argparse.ArgumentTypeError(f"expected positive integers, got {text!r}")
    return values


def _positive_int(text: str) -> int:
    values = _int_list(text)
    if len(values) != 1:
        raise argparse.ArgumentTypeError(f"expected one positive integer, got {text!r}")
    return values[0]


def _grammar_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("-g", "--grammar", dest="grammar_path", required=True, help="Grammar file")


def _sentence_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("-s", "--sentence", help="Inline whitespace-separated sentence")
    parser.add_argument("-S", "--sentence-file", dest="sentence_path", help="Sentence file, one per line")


def _engine_args(parser: argparse.ArgumentParser, default: str = "late") -> None:
    parser.add_argument("-e", "--engine", choices=["earley", "late", "late-parallel"], default=default)
    parser.add_argument("-w", "--workers", type=int, help="Worker threads (LATECHART_WORKERS overrides)")
    parser.add_argument("--queue-policy", choices=["fifo", "lifo", "random"])
    parser.add_argument("--seed", type=int, help="Seed for the random queue policy")


def _output_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("-o", "--output", help="Write here instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="latechart", description="Earley/LATE recognizers and benchmarks")
    parser.add_argument("-v", "--verbose", action="store_true", help="Log at INFO")
    parser.add_argument("--log-level", help="Explicit log level (overrides -v)")
    commands = parser.add_subparsers(dest="subcommand", required=True)

    recognize = commands.add_parser("recognize", help="Print true/false per sentence")
    _grammar_args(recognize)
    _sentence_args(recognize)
    _engine_args(recognize)
    _output_args(recognize)
    recognize.set_defaults(handler=service.recognize_command)

    chart = commands.add_parser("chart", help="Print the canonical chart dump")
    _grammar_args(chart)
    _sentence_args(chart)
    _engine_args(chart)
    _output_args(chart)
    chart.set_defaults(handler=service.chart_command)

    verify = commands.add_parser("verify", help="Cross-engine check over a fixture directory")
    verify.add_argument("directory")
    verify.add_argument(
        "--workers", dest="workers_list", type=_int_list, default=[1, 2, 4, 8], help="LATECHART_WORKERS overrides"
    )
    verify.add_argument("--repetitions", type=int, default=1)
    _output_args(verify)
    verify.set_defaults(handler=service.verify_command)

    bench = commands.add_parser("bench", help="Run a YAML benchmark suite, write CSV")
    bench.add_argument("suite")
    _output_args(bench)
    bench.set_defaults(handler=service.bench_command)

    sweep = commands.add_parser("sweep", help="Ambiguity sweep over replica counts, write CSV")
    _grammar_args(sweep)
    _sentence_args(sweep)
    _engine_args(sweep, default="late-parallel")
    sweep.add_argument("-m", "--replicas", type=_int_list, default=[1, 2, 4])
    _output_args(sweep)
    sweep.set_defaults(handler=service.sweep_command)

    gen = commands.add_parser("gen", help="Write a transformed grammar")
    transforms = gen.add_subparsers(dest="transform", required=True)
    replicate = transforms.add_parser("replicate", help="Replicate every non-START nonterminal")
    _grammar_args(replicate)
    replicate.add_argument("-m", type=int, required=True, help="Copies per nonterminal")
    _output_args(replicate)
    replicate.set_defaults(handler=service.replicate_command)
    wrap = transforms.add_parser("wrap", help="Surround START with wildcard terminals")
    _grammar_args(wrap)
    _output_args(wrap)
    wrap.set_defaults(handler=service.wrap_command)

    weak = commands.add_parser("weak-input", help="Prefix whose chart size is closest to a target")
    _grammar_args(weak)
    _sentence_args(weak)
    weak.add_argument("--target", type=int, required=True)
    weak.add_argument(
        "--skip-monotonic-check",
        action="store_true",
        help="Only compare the prefixes the search visits instead of counting every prefix first",
    )
    _output_args(weak)
    weak.set_defaults(handler=service.weak_input_command)

    weak_scaling = commands.add_parser("weak-scaling", help="Parallel LATE on inputs growing with the worker count, write CSV")
    _grammar_args(weak_scaling)
    _sentence_args(weak_scaling)
    weak_scaling.add_argument("--base-items", type=_positive_int, required=True, help="Chart items per worker")
    weak_scaling.add_argument("--max-workers", type=_positive_int, required=True)
    weak_scaling.add_argument("--queue-policy", choices=["fifo", "lifo", "random"])
    weak_scaling.add_argument("--seed", type=int, help="Seed for the random queue policy")
    _output_args(weak_scaling)
    weak_scaling.set_defaults(handler=service.weak_scaling_command)

    serial_scaling = commands.add_parser("serial-scaling", help="Serial LATE time per prefix length, write CSV")
    _grammar_args(serial_scaling)
    _sentence_args(serial_scaling)
    serial_scaling.add_argument("--lengths", type=_int_list, required=True, help="Comma-separated prefix lengths")
    _output_args(serial_scaling)
    serial_scaling.set_defaults(handler=service.serial_scaling_command)

    return parser


def run_cli(argv: Optional[Sequence[str]] = None) -> int:
    """
    Parse `argv`, dispatch, and map every outcome to an exit code:
    0 success or recognized, 1 not recognized or verification failure,
    2 usage or input error, 3 engine rejection or failure.
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE

    try:
        settings = Settings()
    except ValidationError as exc:
        print(f"error: invalid LATECHART_* environment: {exc}", file=sys.stderr)
        return EXIT_USAGE

    level = args.log_level or ("INFO" if args.verbose else settings.log_level)
    try:
        setup_logging(level.upper())
    except ValueError:
        print(f"error: unknown log level {level!r}", file=sys.stderr)
        return EXIT_USAGE

    try:
        return args.handler(args, settings)
    except LateChartError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
