from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from typing import Iterator, Mapping

from core.exceptions import MissingStartError, UndefinedNonterminalError, GrammarError

START_NAME = "START"
EPSILON_NAME = "EPSILON"


class SymbolKind(str, Enum):
    TERMINAL = "terminal"
    NONTERMINAL = "nonterminal"
    EPSILON = "epsilon"


@dataclass(frozen=True, slots=True)
class Symbol:
    name: str
    kind: SymbolKind

    @property
    def is_terminal(self) -> bool:
        return self.kind is SymbolKind.TERMINAL

    @property
    def is_nonterminal(self) -> bool:
        return self.kind is SymbolKind.NONTERMINAL

    @property
    def is_epsilon(self) -> bool:
        return self.kind is SymbolKind.EPSILON

    def __str__(self) -> str:
        return self.name


EPSILON = Symbol(EPSILON_NAME, SymbolKind.EPSILON)


def terminal(name: str) -> Symbol:
    return Symbol(name, SymbolKind.TERMINAL)


def nonterminal(name: str) -> Symbol:
    return Symbol(name, SymbolKind.NONTERMINAL)


@dataclass(frozen=True, slots=True)
class Rule:
    lhs: Symbol
    rhs: tuple[Symbol, ...]
    # Items hash their rule on every chart insertion; compute it once.
    _hash: int = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if not self.lhs.is_nonterminal:
            raise GrammarError(f"rule lhs {self.lhs.name!r} must be a nonterminal")
        if not self.rhs:
            raise GrammarError(f"rule for {self.lhs.name} has an empty rhs; use {EPSILON_NAME}")
        if any(sym.is_epsilon for sym in self.rhs) and len(self.rhs) != 1:
            raise GrammarError(f"{EPSILON_NAME} must stand alone in a rhs (rule for {self.lhs.name})")
        object.__setattr__(self, "_hash", hash((self.lhs, self.rhs)))

    def __hash__(self) -> int:
        return self._hash

    @property
    def is_epsilon(self) -> bool:
        return self.rhs[0].is_epsilon

    def dotted(self, dot: int) -> str:
        """Render as `LHS -> pre • post`."""
        names = [sym.name for sym in self.rhs]
        return " ".join([self.lhs.name, "->", *names[:dot], "•", *names[dot:]])

    def __str__(self) -> str:
        return f"{self.lhs.name} -> {' '.join(sym.name for sym in self.rhs)}"


@dataclass(frozen=True)
class Grammar:
    """
    An ordered rule set with the designated START symbol.

    Immutable after construction, so engines running on several threads
    share it without locking.
    """

    rules: tuple[Rule, ...]
    start: Symbol = nonterminal(START_NAME)

    def __post_init__(self):
        if not any(rule.lhs == self.start for rule in self.rules):
            raise MissingStartError(self.start.name)

        defined = {rule.lhs for rule in self.rules}
        undefined = {
            sym.name
            for rule in self.rules
            for sym in rule.rhs
            if sym.is_nonterminal and sym not in defined
        }
        if undefined:
            raise UndefinedNonterminalError(undefined)

        # A name is a nonterminal iff it heads a rule
        defined_names = {sym.name for sym in defined}
        stray = {
            sym.name
            for rule in self.rules
            for sym in rule.rhs
            if sym.is_terminal and sym.name in defined_names
        }
        if stray:
            raise GrammarError(f"symbols used as terminals but defined by rules: {', '.join(sorted(stray))}")

    @cached_property
    def _index(self) -> Mapping[Symbol, tuple[Rule, ...]]:
        index: dict[Symbol, list[Rule]] = {}
        for rule in self.rules:
            index.setdefault(rule.lhs, []).append(rule)
        return {lhs: tuple(rules) for lhs, rules in index.items()}

    def rules_for(self, symbol: Symbol) -> tuple[Rule, ...]:
        return self._index.get(symbol, ())

    @cached_property
    def nonterminals(self) -> tuple[Symbol, ...]:
        return tuple(self._index)

    @cached_property
    def terminals(self) -> tuple[Symbol, ...]:
        seen: dict[Symbol, None] = {}
        for rule in self.rules:
            for sym in rule.rhs:
                if sym.is_terminal:
                    seen.setdefault(sym)
        return tuple(seen)

    @cached_property
    def terminal_by_name(self) -> Mapping[str, Symbol]:
        return {sym.name: sym for sym in self.terminals}

    @property
    def epsilon_rules(self) -> tuple[Rule, ...]:
        return tuple(rule for rule in self.rules if rule.is_epsilon)

    def __iter__(self) -> Iterator[Rule]:
        return iter(self.rules)

    def __len__(self) -> int:
        return len(self.rules)


@dataclass(frozen=True, slots=True)
class Sentence:
    tokens: tuple[Symbol, ...] = ()

    def __len__(self) -> int:
        return len(self.tokens)

    def __getitem__(self, index):
        return self.tokens[index]

    def prefix(self, length: int) -> "Sentence":
        return Sentence(self.tokens[:length])

    def __str__(self) -> str:
        return " ".join(tok.name for tok in self.tokens)
