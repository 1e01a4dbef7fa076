import pytest
from hypothesis import given, settings as hsettings, strategies as st

from core.exceptions import GrammarError, ReplicationLimitError
from modules.grammar import parse_grammar, replicate_nonterminals, replicated_rule_count, tokenize, wrap_wildcard
from modules.late import late_parse, late_recognize
from modules.verify import brute_force_recognize
from tests.conftest import grammars, sentences_for


def rule_texts(g):
    return sorted(str(rule) for rule in g)


class TestReplicateNonterminals:
    def test_two_copies(self):
        g = replicate_nonterminals(parse_grammar("START -> N\nN -> a"), 2)
        assert rule_texts(g) == ["N0 -> a", "N1 -> a", "START -> N0", "START -> N1"]

    def test_single_copy_only_renames(self, arith):
        g = replicate_nonterminals(arith, 1)
        assert len(g) == len(arith)
        assert "EXPR0 -> EXPR0 OP0 EXPR0" in rule_texts(g)
        assert g.terminals == arith.terminals

    def test_start_not_replicated(self, arith):
        g = replicate_nonterminals(arith, 3)
        assert sum(sym.name == "START" for sym in g.nonterminals) == 1
        assert sum(sym.name.startswith("EXPR") for sym in g.nonterminals) == 3

    @pytest.mark.parametrize("m", [1, 2, 3])
    def test_copies_per_rule(self, arith, m):
        # EXPR -> EXPR OP EXPR has four occurrences, START -> EXPR one
        g = replicate_nonterminals(arith, m)
        binary = [rule for rule in g if len(rule.rhs) == 3]
        assert len(binary) == m**4
        assert len(g.rules_for(g.start)) == m
        assert len(g) == replicated_rule_count(arith, m)

    def test_cap_enforced(self, arith):
        with pytest.raises(ReplicationLimitError) as exc_info:
            replicate_nonterminals(arith, 10, cap=1000)
        assert exc_info.value.predicted == replicated_rule_count(arith, 10)

    def test_name_collision(self):
        with pytest.raises(GrammarError):
            replicate_nonterminals(parse_grammar("START -> N N0\nN -> a\nN0 -> b"), 2)

    def test_nonpositive_m(self, arith):
        with pytest.raises(GrammarError):
            replicate_nonterminals(arith, 0)

    def test_recognition_unchanged_and_chart_grows(self, arith):
        w = tokenize("5 + 6 * 3", arith)
        sizes = []
        for m in (1, 2, 4):
            chart = late_parse(replicate_nonterminals(arith, m), w)
            assert late_recognize(chart, w)
            sizes.append(len(chart))
        assert sizes[0] < sizes[1] < sizes[2]

    @given(st.data())
    @hsettings(max_examples=50, deadline=None)
    def test_recognition_invariant_on_random_grammars(self, data):
        g = data.draw(grammars(max_rules=5))
        m = data.draw(st.integers(1, 2))
        w = data.draw(sentences_for(g, 4))
        replicated = replicate_nonterminals(g, m)
        assert brute_force_recognize(replicated, w) == brute_force_recognize(g, w)


class TestWrapWildcard:
    def test_rule_count(self, english):
        wrapped = wrap_wildcard(english)
        assert len(wrapped) == len(english) + 5 + len(english.terminals)

    def test_terminal_inventory_kept(self, english):
        assert set(wrap_wildcard(english).terminals) == set(english.terminals)

    def test_start_renamed(self):
        wrapped = wrap_wildcard(parse_grammar("START -> a"))
        assert rule_texts(wrapped) == [
            "START -> START_INNER W",
            "START -> W START_INNER",
            "START -> W START_INNER W",
            "START_INNER -> a",
            "S_WILD -> a",
            "W -> S_WILD",
            "W -> W S_WILD",
        ]

    @pytest.mark.parametrize("text, expected", [("a", False), ("a a", True), ("a a a", True)])
    def test_bare_sentence_needs_a_wildcard(self, text, expected):
        wrapped = wrap_wildcard(parse_grammar("START -> a"))
        w = tokenize(text, wrapped)
        assert late_recognize(late_parse(wrapped, w), w) is expected
        assert brute_force_recognize(wrapped, w) is expected

    def test_fresh_names_avoid_collisions(self):
        wrapped = wrap_wildcard(parse_grammar("START -> W\nW -> w"))
        names = {sym.name for sym in wrapped.nonterminals}
        assert {"START", "START_INNER", "W", "W_", "S_WILD"} <= names

    def test_finds_embedded_sentence(self, english):
        wrapped = wrap_wildcard(english)
        w = tokenize("dog the alice saw the dog in the park cat", wrapped)
        assert late_recognize(late_parse(wrapped, w), w)

    @pytest.mark.parametrize("text", ["START -> EPSILON", "START -> N N\nN -> EPSILON"])
    def test_grammar_without_terminals_is_rejected(self, text):
        with pytest.raises(GrammarError, match="without terminals"):
            wrap_wildcard(parse_grammar(text))
