import pytest

from modules.grammar import Sentence, parse_grammar, tokenize
from modules.late import (
    GlobalChart,
    LateItem,
    ParseTables,
    QueuePolicy,
    WorkQueue,
    late_parse,
    late_parse_with_tables,
    late_recognize,
)
from modules.verify import canonicalize_late
from tests.conftest import fixture_grammar


class TestWorkQueue:
    def test_fifo(self):
        q = WorkQueue(QueuePolicy.FIFO)
        for n in range(3):
            q.push(n)
        assert [q.pop() for _ in range(3)] == [0, 1, 2]

    def test_lifo(self):
        q = WorkQueue(QueuePolicy.LIFO)
        for n in range(3):
            q.push(n)
        assert [q.pop() for _ in range(3)] == [2, 1, 0]

    def test_random_is_seeded_permutation(self):
        def drain(seed):
            q = WorkQueue(QueuePolicy.RANDOM, seed)
            for n in range(20):
                q.push(n)
            return [q.pop() for _ in range(20)]

        assert sorted(drain(3)) == list(range(20))
        assert drain(3) == drain(3)

    def test_policy_from_string(self):
        assert WorkQueue("lifo").policy is QueuePolicy.LIFO


class TestLateParse:
    def test_epsilon_grammar(self, eps):
        w = Sentence()
        chart = late_parse(eps, w)
        start_rule = eps.rules_for(eps.start)[0]
        assert LateItem(start_rule, 2, 0, 0) in chart
        assert late_recognize(chart, w)

    @pytest.mark.parametrize(
        "text, expected",
        [("", True), ("a", True), ("b b", True), ("a b a", True), ("a a a", False), ("b a b", False)],
    )
    def test_nullable(self, nullable, text, expected):
        w = tokenize(text, nullable)
        assert late_recognize(late_parse(nullable, w), w) is expected

    def test_scan_mismatch_adds_nothing(self):
        g = parse_grammar("START -> a")
        chart = late_parse(g, tokenize("", g))
        assert len(chart) == 1
        assert not late_recognize(chart, Sentence())

    def test_single_dispatch_per_item(self, arith):
        chart = late_parse(arith, tokenize("1 + 2 * 3 + 4", arith))
        assert chart.dispatches == len(chart)

    def test_insert_reports_novelty(self):
        g = parse_grammar("START -> a")
        chart = GlobalChart()
        item = LateItem(g.rules[0], 0, 0, 0)
        assert chart.insert(item)
        assert not chart.insert(item)
        assert len(chart.pending) == 1


class TestParseTables:
    def test_first_request_reported_once(self, arith):
        t = ParseTables()
        item = LateItem(arith.rules[0], 0, 0, 0)
        key = (arith.rules[0].rhs[0], 0)
        assert t.register_request(key, item)
        assert not t.register_request(key, item.advance(0))
        assert len(t.requests_at(key)) == 2

    def test_completion_claimed_once(self, arith):
        t = ParseTables()
        triple = (arith.start, 0, 1)
        assert t.claim_completion(triple)
        assert not t.claim_completion(triple)

    def test_tables_cohere_with_chart(self, arith):
        w = tokenize("5 + 6 * 3", arith)
        chart, tables = late_parse_with_tables(arith, w)

        finished = {(item.rule.lhs, item.origin, item.current) for item in chart if item.is_finished}
        assert tables.completed == finished
        for (lhs, origin), ends in tables.replies.items():
            assert ends == {k for n, i, k in finished if n == lhs and i == origin}

        for (sym, k), waiters in tables.requests.items():
            for waiter in waiters:
                assert waiter in chart
                assert (waiter.next_symbol, waiter.current) == (sym, k)
            # Every reply reached every waiter
            for end in tables.replies.get((sym, k), ()):
                for waiter in waiters:
                    assert waiter.advance(end) in chart


ORDER_FIXTURES = [
    ("arith", "5 + 6 * 3"),
    ("arith", "1 + 2 + 3 + 4"),
    ("arith", "9 * 8 + 7 * 6"),
    ("arith", "7"),
    ("arith", "1 +"),
    ("pl", "id = num ;"),
    ("pl", "print id * ( num + id ) ;"),
    ("pl", "if ( id == num ) { } else { print id ; }"),
    ("pl", "id = ;"),
    ("eps", ""),
    ("nullable", ""),
    ("nullable", "a b b a"),
    ("nullable", "b a b"),
    ("ambiguous", "a a a"),
    ("ambiguous", "a a a a a"),
    ("english", "alice saw the dog"),
    ("english", "the cat chased bob in the park"),
    ("english", "saw the dog"),
    ("tiny", "a"),
    ("tiny", "a a"),
]


@pytest.mark.parametrize("name, text", ORDER_FIXTURES)
def test_dispatch_order_does_not_change_chart(name, text):
    g = fixture_grammar(name)
    w = tokenize(text, g)
    reference = canonicalize_late(late_parse(g, w))
    assert canonicalize_late(late_parse(g, w, policy=QueuePolicy.LIFO)) == reference
    for seed in range(20):
        assert canonicalize_late(late_parse(g, w, policy=QueuePolicy.RANDOM, seed=seed)) == reference

