import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional, Sequence

from core.config import settings
from core.engine import EngineFactory, EngineName
from modules.grammar import Grammar, Sentence, load_grammar, load_sentences, validate_for_earley
from modules.parallel import ParallelConfig
from .canonical import charts_equal
from .oracle import brute_force_recognize

logger = logging.getLogger(__name__)


@dataclass
class FixtureReport:
    fixture: str
    sentence: str
    recognized: Optional[bool] = None
    oracle: Optional[bool] = None
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def render(self) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        head = f"{verdict}\t{self.fixture}\t{self.sentence or 'EPSILON'}"
        return "\n".join([head, *self.failures])


def verify_sentence(
    fixture: str,
    g: Grammar,
    w: Sentence,
    workers: Sequence[int] = (1, 2, 4, 8),
    repetitions: int = 1,
    *,
    oracle_cap: Optional[int] = None,
) -> FixtureReport:
    """
    Compare serial LATE against Earley (when the grammar is ε-free) and
    against parallel LATE for each worker count; check recognition against
    the brute-force oracle when the sentence is short enough.
    """
    oracle_cap = settings.oracle_max_tokens if oracle_cap is None else oracle_cap
    report = FixtureReport(fixture=fixture, sentence=str(w))

    reference_engine = EngineFactory.get_engine(EngineName.LATE_SERIAL)
    reference_chart = reference_engine.parse(g, w)
    reference = reference_engine.canonical(reference_chart)
    report.recognized = reference_engine.recognize(reference_chart, g, w)

    candidates = []
    if validate_for_earley(g).ok:
        candidates.append(("earley", EngineFactory.get_engine(EngineName.EARLEY)))
    for p in workers:
        engine = EngineFactory.get_engine(EngineName.LATE_PARALLEL, ParallelConfig(workers=p))
        candidates += [(f"late-parallel/p={p}", engine)] * repetitions

    for label, engine in candidates:
        chart = engine.parse(g, w)
        diff = charts_equal(reference, engine.canonical(chart))
        if not diff:
            report.failures.append(f"chart mismatch late-serial vs {label}\n{diff.render()}")
        if engine.recognize(chart, g, w) != report.recognized:
            report.failures.append(f"recognition mismatch late-serial vs {label}")

    if len(w) <= oracle_cap:
        report.oracle = brute_force_recognize(g, w, cap=oracle_cap)
        if report.oracle != report.recognized:
            report.failures.append(f"oracle says {report.oracle}, engines say {report.recognized}")

    return report


def verify_fixture(
    fixture: str,
    g: Grammar,
    sentences: Sequence[Sentence],
    workers: Sequence[int] = (1, 2, 4, 8),
    repetitions: int = 1,
) -> list[FixtureReport]:
    reports = [verify_sentence(fixture, g, w, workers, repetitions) for w in sentences]
    for report in reports:
        if not report.passed:
            logger.warning("Fixture failed", extra={"fixture": report.fixture, "sentence": report.sentence})
    return reports


def verify_directory(
    directory: str | Path,
    workers: Sequence[int] = (1, 2, 4, 8),
    repetitions: int = 1,
) -> list[FixtureReport]:
    """Verify every `*.g` grammar that has a sibling `*.txt` sentence file."""
    reports = []
    for grammar_path in sorted(Path(directory).glob("*.g")):
        sentence_path = grammar_path.with_suffix(".txt")
        if not sentence_path.exists():
            logger.info("Grammar has no sentence file; skipped", extra={"grammar": str(grammar_path)})
            continue
        g = load_grammar(grammar_path)
        reports += verify_fixture(grammar_path.stem, g, load_sentences(sentence_path, g), workers, repetitions)
    return reports
