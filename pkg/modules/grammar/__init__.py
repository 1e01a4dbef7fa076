from .schemas import (
    EPSILON,
    START_NAME,
    Grammar,
    Rule,
    Sentence,
    Symbol,
    SymbolKind,
    nonterminal,
    terminal,
)
from .parser import load_grammar, load_sentences, parse_grammar, serialize_grammar, tokenize
from .validation import EarleyValidation, validate_for_earley
from .transforms import replicate_nonterminals, replicated_rule_count, wrap_wildcard

__all__ = [
    "EPSILON",
    "START_NAME",
    "Grammar",
    "Rule",
    "Sentence",
    "Symbol",
    "SymbolKind",
    "nonterminal",
    "terminal",
    "load_grammar",
    "load_sentences",
    "parse_grammar",
    "serialize_grammar",
    "tokenize",
    "EarleyValidation",
    "validate_for_earley",
    "replicate_nonterminals",
    "replicated_rule_count",
    "wrap_wildcard",
]
