from pathlib import Path

import pytest
from hypothesis import strategies as st

from modules.grammar import Grammar, Sentence, load_grammar, parse_grammar, tokenize

DATA_DIR = Path(__file__).resolve().parent.parent / "data"
GRAMMAR_DIR = DATA_DIR / "grammars"
SUITE_DIR = DATA_DIR / "suites"

NONTERMINAL_NAMES = ["START", "A", "B", "C"]
TERMINAL_NAMES = ["a", "b"]


def fixture_grammar(name: str) -> Grammar:
    return load_grammar(GRAMMAR_DIR / f"{name}.g")


def sentence(g: Grammar, text: str) -> Sentence:
    return tokenize(text, g)


@pytest.fixture
def arith() -> Grammar:
    return fixture_grammar("arith")


@pytest.fixture
def pl() -> Grammar:
    return fixture_grammar("pl")


@pytest.fixture
def eps() -> Grammar:
    return fixture_grammar("eps")


@pytest.fixture
def nullable() -> Grammar:
    return fixture_grammar("nullable")


@pytest.fixture
def ambiguous() -> Grammar:
    return fixture_grammar("ambiguous")


@pytest.fixture
def english() -> Grammar:
    return fixture_grammar("english")


@st.composite
def grammar_texts(draw, *, allow_epsilon: bool = False, max_rules: int = 8) -> str:
    """
    Grammar text over START/A/B/C and a/b. A nonterminal name that heads
    no rule is read back as a terminal, so every draw parses.
    """
    symbol = st.sampled_from(NONTERMINAL_NAMES + TERMINAL_NAMES)
    body = st.lists(symbol, min_size=1, max_size=3).map(" ".join)
    if allow_epsilon:
        body = body | st.just("EPSILON")
    lhs = st.sampled_from(NONTERMINAL_NAMES)

    lines = [f"START -> {draw(body)}"]
    for _ in range(draw(st.integers(0, max_rules - 1))):
        lines.append(f"{draw(lhs)} -> {draw(body)}")
    return "\n".join(lines)


@st.composite
def grammars(draw, *, allow_epsilon: bool = False, max_rules: int = 8) -> Grammar:
    return parse_grammar(draw(grammar_texts(allow_epsilon=allow_epsilon, max_rules=max_rules)))


@st.composite
def nullable_grammars(draw, max_rules: int = 8) -> Grammar:
    """Grammars with at least one ε-rule."""
    text = draw(grammar_texts(allow_epsilon=True, max_rules=max_rules - 1))
    nt = draw(st.sampled_from(NONTERMINAL_NAMES))
    # Only START is sure to head a rule already; keep the ε-rule on a defined name
    defined = {line.split("->")[0].strip() for line in text.splitlines()}
    if nt not in defined:
        nt = "START"
    return parse_grammar(f"{text}\n{nt} -> EPSILON")


def sentences_for(g: Grammar, max_size: int) -> st.SearchStrategy[Sentence]:
    if not g.terminals:
        return st.just(Sentence())
    return st.lists(st.sampled_from(g.terminals), max_size=max_size).map(lambda toks: Sentence(tuple(toks)))
