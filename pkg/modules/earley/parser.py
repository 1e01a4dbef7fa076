import logging

from core.exceptions import EarleyRejectionError
from modules.grammar.schemas import Grammar, Sentence
from modules.grammar.validation import validate_for_earley
from .chart import EarleyChart, Item

logger = logging.getLogger(__name__)


def earley_scan(item: Item, k: int, w: Sentence, chart: EarleyChart) -> None:
    """Advance over a matching terminal into set k+1.

    An ε next symbol is advanced in place (same set), which is how the
    classic formulation treats empty rules.
    """
    sym = item.rule.rhs[item.dot]
    if sym.is_epsilon:
        chart.add(k, item.advance())
    elif k < len(w) and w.tokens[k] == sym:
        chart.add(k + 1, item.advance())


def earley_predict(item: Item, k: int, g: Grammar, chart: EarleyChart) -> None:
    sym = item.rule.rhs[item.dot]
    for rule in g.rules_for(sym):
        chart.add(k, Item(rule, 0, k))


def earley_complete(item: Item, k: int, chart: EarleyChart) -> None:
    """Advance every item in the origin set that was waiting on this lhs."""
    finished = item.rule.lhs
    # Snapshot: waiters added to the origin set during this call are not
    # offered this completion. With i == k (ε-rules) that is the classic stall.
    for waiter in list(chart.sets[item.origin]):
        rhs = waiter.rule.rhs
        if waiter.dot < len(rhs) and rhs[waiter.dot] == finished:
            chart.add(k, waiter.advance())


def earley_dispatch(item: Item, k: int, g: Grammar, w: Sentence, chart: EarleyChart) -> None:
    chart.dispatches += 1
    rhs = item.rule.rhs
    if item.dot == len(rhs):
        earley_complete(item, k, chart)
    elif rhs[item.dot].is_nonterminal:
        earley_predict(item, k, g, chart)
    else:
        earley_scan(item, k, w, chart)


def seed_chart(g: Grammar, w: Sentence) -> EarleyChart:
    chart = EarleyChart(len(w))
    for rule in g.rules_for(g.start):
        chart.add(0, Item(rule, 0, 0))
    return chart


def fill_chart(chart: EarleyChart, g: Grammar, w: Sentence) -> EarleyChart:
    """Process sets 0..|W| in order, each to fixpoint, FIFO within a set."""
    for k in range(len(w) + 1):
        items = chart.sets[k]
        index = 0
        while index < len(items):
            earley_dispatch(items[index], k, g, w, chart)
            index += 1
    return chart


def earley_parse(g: Grammar, w: Sentence) -> EarleyChart:
    validation = validate_for_earley(g)
    if not validation.ok:
        raise EarleyRejectionError(validation.offending)

    chart = fill_chart(seed_chart(g, w), g, w)
    logger.debug("Earley parse finished", extra={"tokens": len(w), "items": len(chart), "dispatches": chart.dispatches})
    return chart


def earley_recognize(chart: EarleyChart, g: Grammar, w: Sentence) -> bool:
    """True iff a finished START item with origin 0 is in the last set."""
    return any(
        item.origin == 0 and item.is_finished and item.rule.lhs == g.start
        for item in chart.sets[len(w)]
    )
