import itertools
import logging
from typing import Optional

from core.config import settings
from core.exceptions import GrammarError, ReplicationLimitError
from .schemas import START_NAME, Grammar, Rule, Symbol, nonterminal

logger = logging.getLogger(__name__)


def _replicable(sym: Symbol, start: Symbol) -> bool:
    return sym.is_nonterminal and sym != start


def replicated_rule_count(g: Grammar, m: int) -> int:
    """Rules produced by `replicate_nonterminals(g, m)`, without building them."""
    total = 0
    for rule in g.rules:
        occurrences = sum(_replicable(sym, g.start) for sym in (rule.lhs, *rule.rhs))
        total += m ** occurrences
    return total


def replicate_nonterminals(g: Grammar, m: int, *, cap: Optional[int] = None) -> Grammar:
    """
    Replace every non-START nonterminal X by m interchangeable copies X0..X(m-1).

    Each rule is expanded over every independent choice of copy for its lhs
    and for each nonterminal occurrence in its rhs, so a rule with c such
    occurrences becomes m**c rules. Recognition is unchanged; ambiguity grows.
    """
    if m < 1:
        raise GrammarError(f"replica count must be positive, got {m}")
    cap = settings.replication_cap if cap is None else cap

    predicted = replicated_rule_count(g, m)
    if predicted > cap:
        raise ReplicationLimitError(predicted, cap)

    existing = {sym.name for sym in g.nonterminals} | {sym.name for sym in g.terminals}
    copies: dict[Symbol, tuple[Symbol, ...]] = {}
    for sym in g.nonterminals:
        if sym == g.start:
            continue
        names = [f"{sym.name}{n}" for n in range(m)]
        clash = [name for name in names if name in existing]
        if clash:
            raise GrammarError(f"replica names collide with existing symbols: {', '.join(clash)}")
        copies[sym] = tuple(nonterminal(name) for name in names)

    def choices(sym: Symbol) -> tuple[Symbol, ...]:
        return copies.get(sym, (sym,))

    rules = []
    for rule in g.rules:
        for lhs in choices(rule.lhs):
            for rhs in itertools.product(*(choices(sym) for sym in rule.rhs)):
                rules.append(Rule(lhs, rhs))

    logger.info("Nonterminals replicated", extra={"replicas": m, "rules_in": len(g), "rules_out": len(rules)})
    return Grammar(tuple(rules), start=g.start)


def _fresh_name(base: str, taken: set[str]) -> str:
    name = base
    while name in taken:
        name += "_"
    taken.add(name)
    return name


def wrap_wildcard(g: Grammar) -> Grammar:
    """
    Accept a sentence of `g` surrounded by any number of `g`'s terminals.

    The original start symbol is renamed; the new START gets three wrapper
    rules (wildcards before, around, after), the wildcard run W is
    left-recursive, and one rule per terminal lets a wildcard be any
    terminal. A bare sentence of `g` needs at least one wildcard to match.

    Raises GrammarError when `g` has no terminals, since the wildcard
    nonterminal would then have no rules.
    """
    if not g.terminals:
        raise GrammarError("cannot wrap a grammar without terminals: the wildcard would derive nothing")
    taken = {sym.name for sym in g.nonterminals} | {sym.name for sym in g.terminals}
    taken.discard(START_NAME)
    inner = nonterminal(_fresh_name(f"{g.start.name}_INNER", taken))
    run = nonterminal(_fresh_name("W", taken))
    wild = nonterminal(_fresh_name("S_WILD", taken))

    def rename(sym: Symbol) -> Symbol:
        return inner if sym == g.start else sym

    rules = [Rule(rename(rule.lhs), tuple(rename(sym) for sym in rule.rhs)) for rule in g.rules]
    start = g.start
    rules += [
        Rule(start, (run, inner)),
        Rule(start, (run, inner, run)),
        Rule(start, (inner, run)),
        Rule(run, (run, wild)),
        Rule(run, (wild,)),
    ]
    rules += [Rule(wild, (term,)) for term in g.terminals]

    logger.info("Grammar wrapped with wildcards", extra={"rules_in": len(g), "rules_out": len(rules)})
    return Grammar(tuple(rules), start=start)
