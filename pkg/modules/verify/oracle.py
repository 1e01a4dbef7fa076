import itertools
import math
from collections import deque
from typing import Mapping, Optional, Sequence

from core.config import settings
from core.exceptions import OracleLimitError
from modules.grammar.schemas import Grammar, Sentence, Symbol

Bodies = Mapping[Symbol, Sequence[tuple[Symbol, ...]]]

# Leftmost sentential form with its matched terminal prefix consumed:
# (tokens matched so far, remaining symbols starting at a nonterminal)
Form = tuple[int, tuple[Symbol, ...]]


def _min_lengths(bodies: Bodies) -> dict[Symbol, float]:
    best: dict[Symbol, float] = {sym: math.inf for sym in bodies}
    changed = True
    while changed:
        changed = False
        for lhs, alternatives in bodies.items():
            for body in alternatives:
                length = sum(best[sym] if sym.is_nonterminal else 1 for sym in body)
                if length < best[lhs]:
                    best[lhs] = length
                    changed = True
    return best


def _bodies(g: Grammar) -> dict[Symbol, list[tuple[Symbol, ...]]]:
    """Right-hand sides per nonterminal, ε-rules as the empty body."""
    return {nt: [() if rule.is_epsilon else rule.rhs for rule in g.rules_for(nt)] for nt in g.nonterminals}


def minimum_lengths(g: Grammar) -> dict[Symbol, float]:
    """Shortest terminal string each nonterminal derives; inf when unproductive."""
    return _min_lengths(_bodies(g))


def _without_epsilon(g: Grammar, nullable: set[Symbol]) -> dict[Symbol, list[tuple[Symbol, ...]]]:
    """Every way of dropping nullable occurrences, minus empty bodies and X -> X."""
    bodies: dict[Symbol, dict[tuple[Symbol, ...], None]] = {nt: {} for nt in g.nonterminals}
    for rule in g.rules:
        if rule.is_epsilon:
            continue
        options = [((sym,), ()) if sym in nullable else ((sym,),) for sym in rule.rhs]
        for combo in itertools.product(*options):
            body = tuple(itertools.chain.from_iterable(combo))
            if body and body != (rule.lhs,):
                bodies[rule.lhs].setdefault(body)
    return {nt: list(alternatives) for nt, alternatives in bodies.items()}


def brute_force_recognize(g: Grammar, w: Sentence, *, cap: Optional[int] = None) -> bool:
    """
    Decide whether START derives `w` by breadth-first enumeration of
    leftmost derivations.

    ε-rules are first eliminated (a nonterminal with minimum length 0 is
    nullable; the empty sentence is accepted iff START is). In the ε-free
    grammar every productive symbol yields at least one token, so pruning
    forms whose consumed prefix disagrees with `w` or whose minimum length
    exceeds |w| bounds every form by |w| symbols; the visited set then
    makes unit cycles (A -> B, B -> A) terminate. Shares no code with the
    chart engines.
    """
    cap = settings.oracle_max_tokens if cap is None else cap
    n = len(w)
    if n > cap:
        raise OracleLimitError(n, cap)

    original = minimum_lengths(g)
    if n == 0:
        return original[g.start] == 0

    bodies = _without_epsilon(g, {sym for sym, length in original.items() if length == 0})
    minlen = _min_lengths(bodies)
    target = w.tokens

    def normalize(matched: int, symbols: tuple[Symbol, ...]) -> Optional[Form]:
        i = 0
        while i < len(symbols) and not symbols[i].is_nonterminal:
            if matched >= n or symbols[i] != target[matched]:
                return None
            matched += 1
            i += 1
        rest = symbols[i:]
        if matched + sum(minlen[s] if s.is_nonterminal else 1 for s in rest) > n:
            return None
        return matched, rest

    initial = normalize(0, (g.start,))
    if initial is None:
        return False
    seen = {initial}
    frontier = deque([initial])
    while frontier:
        matched, rest = frontier.popleft()
        if not rest:
            if matched == n:
                return True
            continue
        head, tail = rest[0], rest[1:]
        for body in bodies[head]:
            form = normalize(matched, body + tail)
            if form is not None and form not in seen:
                seen.add(form)
                frontier.append(form)
    return False
