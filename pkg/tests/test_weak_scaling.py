import random

import pytest

from core.exceptions import MonotonicityError, TargetUnreachableError
from modules.bench import (
    build_weak_scaling_series,
    chart_items,
    check_monotonic,
    find_weak_scaling_prefix,
)
from modules.bench import weak_scaling
from modules.grammar import tokenize
from tests.conftest import fixture_grammar

FIXTURES = [
    ("arith", "1 + 2 * 3 + 4 * 5 + 6"),
    ("pl", "id = num ; print id * ( num + id ) ; while ( id < num ) { id = id + num ; }"),
    ("ambiguous", "a a a a a a a a"),
    ("english", "the cat chased bob in the park"),
]


def closest_by_scan(counts: list[int], target: int) -> int:
    return min(range(len(counts)), key=lambda length: (abs(counts[length] - target), length))


@pytest.mark.parametrize("name, text", FIXTURES)
def test_matches_exhaustive_scan(name, text):
    g = fixture_grammar(name)
    w = tokenize(text, g)
    counts = check_monotonic(g, w)
    rng = random.Random(name)
    for target in [rng.randint(1, counts[-1]) for _ in range(20)]:
        prefix = find_weak_scaling_prefix(g, w, target)
        expected = closest_by_scan(counts, target)
        assert prefix.length == expected
        assert prefix.chart_items == counts[expected]
        assert prefix.residual == counts[expected] - target


def test_tie_goes_to_shorter_prefix(arith, monkeypatch):
    w = tokenize("1 + 2", arith)
    monkeypatch.setattr(weak_scaling, "chart_items", lambda g, prefix: (10, 10, 20, 30)[len(prefix)])
    prefix = find_weak_scaling_prefix(arith, w, 15)
    assert (prefix.length, prefix.chart_items, prefix.residual) == (0, 10, -5)
    assert find_weak_scaling_prefix(arith, w, 26).length == 3


def test_exact_hit(arith):
    w = tokenize("1 + 2 * 3", arith)
    n = chart_items(arith, w.prefix(3))
    prefix = find_weak_scaling_prefix(arith, w, n)
    assert (prefix.length, prefix.residual) == (3, 0)


def test_unreachable_target(arith):
    w = tokenize("1 + 2", arith)
    with pytest.raises(TargetUnreachableError) as exc_info:
        find_weak_scaling_prefix(arith, w, 10**6)
    assert exc_info.value.available == chart_items(arith, w)


def test_monotonicity_violation_detected(arith, monkeypatch):
    w = tokenize("1 + 2 * 3", arith)
    monkeypatch.setattr(weak_scaling, "chart_items", lambda g, prefix: 100 - len(prefix))
    with pytest.raises(MonotonicityError):
        check_monotonic(arith, w)
    with pytest.raises(MonotonicityError):
        find_weak_scaling_prefix(arith, w, 95)


def test_series_scales_targets(ambiguous):
    w = tokenize("a a a a a a a a", ambiguous)
    base = chart_items(ambiguous, w.prefix(2))
    series = build_weak_scaling_series(ambiguous, w, base, 3)
    assert [p for p, _ in series] == [1, 2, 3]
    assert [prefix.target for _, prefix in series] == [base, 2 * base, 3 * base]
    lengths = [prefix.length for _, prefix in series]
    assert lengths == sorted(lengths)


def test_dip_between_searched_prefixes_rejected_by_default(arith, monkeypatch):
    w = tokenize("1 + 2", arith)
    monkeypatch.setattr(weak_scaling, "chart_items", lambda g, prefix: (10, 5, 20, 30)[len(prefix)])
    with pytest.raises(MonotonicityError):
        find_weak_scaling_prefix(arith, w, 20)
    with pytest.raises(MonotonicityError):
        build_weak_scaling_series(arith, w, 10, 2)
