"""Earley, serial LATE and parallel LATE build the same chart and agree with the oracle."""

import pytest
from hypothesis import given, settings as hsettings, strategies as st

from modules.earley import earley_parse, earley_recognize
from modules.grammar import Grammar, Sentence, replicate_nonterminals, tokenize, validate_for_earley, wrap_wildcard
from modules.late import late_parse, late_recognize
from modules.parallel import ParallelConfig, late_parse_parallel
from modules.verify import brute_force_recognize, canonicalize, charts_equal
from tests.conftest import grammars, nullable_grammars, sentences_for

WORKER_COUNTS = (1, 2, 4, 8)
REPETITIONS = 10


def assert_engines_agree(g: Grammar, w: Sentence, repetitions: int = REPETITIONS) -> bool:
    serial = late_parse(g, w)
    reference = canonicalize(serial)
    recognized = late_recognize(serial, w)

    if validate_for_earley(g).ok:
        earley = earley_parse(g, w)
        diff = charts_equal(reference, canonicalize(earley))
        assert diff, diff.render()
        assert earley_recognize(earley, g, w) == recognized

    for workers in WORKER_COUNTS:
        for _ in range(repetitions):
            chart = late_parse_parallel(g, w, ParallelConfig(workers=workers))
            diff = charts_equal(reference, canonicalize(chart))
            assert diff, diff.render()
    return recognized


@pytest.mark.parametrize("m, text", [(1, "5 + 6 * 3"), (1, "1 + 2 * 3 + 4 * 5"), (2, "5 + 6 * 3"), (2, "9 * 8 +")])
def test_arith_fixture(arith, m, text):
    g = replicate_nonterminals(arith, m)
    assert_engines_agree(g, tokenize(text, g))


@pytest.mark.slow
def test_arith_ten_replicas(arith):
    g = replicate_nonterminals(arith, 10)
    assert assert_engines_agree(g, tokenize("7", g), repetitions=2)


@pytest.mark.parametrize(
    "text",
    ["id = num ;", "while ( id < num ) { id = id + num ; }", "if ( id == num ) { } else { print id ; }", "id = ;"],
)
def test_programming_language_fixture(pl, text):
    assert_engines_agree(pl, tokenize(text, pl))


@pytest.mark.parametrize("text", ["dog alice saw the dog", "the cat chased bob in the park park", "alice saw"])
def test_wrapped_fixture(english, text):
    g = wrap_wildcard(english)
    assert_engines_agree(g, tokenize(text, g))


@given(st.data())
@hsettings(max_examples=200, deadline=None)
def test_random_epsilon_free_grammars(data):
    g = data.draw(grammars())
    w = data.draw(sentences_for(g, 10))
    recognized = assert_engines_agree(g, w)
    assert recognized == brute_force_recognize(g, w)


@given(st.data())
@hsettings(max_examples=100, deadline=None)
def test_random_nullable_grammars_match_oracle(data):
    g = data.draw(nullable_grammars())
    w = data.draw(sentences_for(g, 6))
    recognized = assert_engines_agree(g, w, repetitions=1)
    assert recognized == brute_force_recognize(g, w)


def test_epsilon_stall_resolved(eps):
    assert not validate_for_earley(eps)
    w = Sentence()
    chart = late_parse(eps, w)
    assert late_recognize(chart, w)
    assert any(item.is_finished and item.rule.lhs == eps.start and item.origin == 0 for item in chart)
    assert brute_force_recognize(eps, w)
