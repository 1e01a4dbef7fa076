import logging
from typing import Optional

from modules.grammar.schemas import START_NAME, Grammar, Sentence
from .queue import QueuePolicy
from .schemas import GlobalChart, LateItem, ParseTables

logger = logging.getLogger(__name__)


def late_scan(item: LateItem, w: Sentence, chart: GlobalChart) -> None:
    sym = item.rule.rhs[item.dot]
    k = item.current
    if sym.is_epsilon:
        # ε consumes nothing: the dot moves, the position stays
        chart.insert(item.advance(k))
    elif k < len(w) and w.tokens[k] == sym:
        chart.insert(item.advance(k + 1))


def late_predict(item: LateItem, g: Grammar, chart: GlobalChart, t: ParseTables) -> None:
    """
    Record the request, seed N's rules on the first request at (N, k), then
    advance over every reply already known for (N, k).

    The request is registered before the replies are read; a completion
    racing with this call records its reply before reading requests, so
    one side always sees the other.
    """
    sym = item.rule.rhs[item.dot]
    k = item.current
    key = (sym, k)

    if t.register_request(key, item):
        for rule in g.rules_for(sym):
            chart.insert(LateItem(rule, 0, k, k))

    for end in t.replies_at(key):
        chart.insert(item.advance(end))


def late_complete(item: LateItem, chart: GlobalChart, t: ParseTables) -> None:
    lhs, i, k = item.rule.lhs, item.origin, item.current
    if not t.claim_completion((lhs, i, k)):
        return

    # Reply before reading requests (see late_predict)
    t.add_reply((lhs, i), k)
    for waiter in t.requests_at((lhs, i)):
        chart.insert(waiter.advance(k))


def late_dispatch(item: LateItem, g: Grammar, w: Sentence, chart: GlobalChart, t: ParseTables) -> None:
    rhs = item.rule.rhs
    if item.dot == len(rhs):
        late_complete(item, chart, t)
    elif rhs[item.dot].is_nonterminal:
        late_predict(item, g, chart, t)
    else:
        late_scan(item, w, chart)


def seed_chart(g: Grammar, chart: GlobalChart) -> None:
    for rule in g.rules_for(g.start):
        chart.insert(LateItem(rule, 0, 0, 0))


def late_parse_with_tables(
    g: Grammar,
    w: Sentence,
    *,
    policy: QueuePolicy = QueuePolicy.FIFO,
    seed: Optional[int] = None,
) -> tuple[GlobalChart, ParseTables]:
    """Serial LATE returning the chart and its tables (for coherence checks)."""
    chart = GlobalChart(policy, seed)
    tables = ParseTables()
    seed_chart(g, chart)
    drain(chart, tables, g, w)
    logger.debug("LATE parse finished", extra={"tokens": len(w), "items": len(chart), "dispatches": chart.dispatches})
    return chart, tables


def drain(chart: GlobalChart, tables: ParseTables, g: Grammar, w: Sentence) -> GlobalChart:
    pending = chart.pending
    while pending:
        item = pending.pop()
        chart.dispatches += 1
        late_dispatch(item, g, w, chart, tables)
    return chart


def late_parse(
    g: Grammar,
    w: Sentence,
    *,
    policy: QueuePolicy = QueuePolicy.FIFO,
    seed: Optional[int] = None,
) -> GlobalChart:
    chart, _ = late_parse_with_tables(g, w, policy=policy, seed=seed)
    return chart


def late_recognize(chart: GlobalChart, w: Sentence) -> bool:
    """True iff some finished START item spans 0..|W|."""
    end = len(w)
    return any(
        item.origin == 0 and item.current == end and item.is_finished and item.rule.lhs.name == START_NAME
        for item in chart.items
    )
