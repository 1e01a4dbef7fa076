import logging
from pathlib import Path

from core.exceptions import GrammarSyntaxError, UnknownTokenError
from .schemas import (
    EPSILON,
    EPSILON_NAME,
    START_NAME,
    Grammar,
    Rule,
    Sentence,
    Symbol,
    SymbolKind,
)

logger = logging.getLogger(__name__)

ARROW = "->"
ALTERNATIVE = "|"
COMMENT = "#"


def _split_rules(text: str) -> list[tuple[int, str, list[list[str]]]]:
    """Tokenize the grammar text into (line number, lhs, alternatives)."""
    parsed = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split(COMMENT, 1)[0].strip()
        if not line:
            continue

        head, arrow, body = line.partition(ARROW)
        if not arrow:
            raise GrammarSyntaxError(lineno, f"expected '{ARROW}' in {line!r}")

        lhs_parts = head.split()
        if len(lhs_parts) != 1:
            raise GrammarSyntaxError(lineno, "left-hand side must be exactly one symbol")
        lhs = lhs_parts[0]
        if lhs == EPSILON_NAME:
            raise GrammarSyntaxError(lineno, f"{EPSILON_NAME} cannot head a rule")

        alternatives = []
        for alt in body.split(ALTERNATIVE):
            symbols = alt.split()
            if not symbols:
                raise GrammarSyntaxError(lineno, f"empty alternative for {lhs}; write {EPSILON_NAME}")
            if ARROW in symbols:
                raise GrammarSyntaxError(lineno, f"unexpected '{ARROW}' in right-hand side")
            if EPSILON_NAME in symbols and len(symbols) != 1:
                raise GrammarSyntaxError(lineno, f"{EPSILON_NAME} must stand alone in an alternative")
            alternatives.append(symbols)
        parsed.append((lineno, lhs, alternatives))
    return parsed


def parse_grammar(text: str) -> Grammar:
    """
    Parse the line-oriented grammar format.

    One rule per line, `LHS -> sym sym ... | sym ...`. A symbol is a
    nonterminal iff it heads at least one rule; everything else on a
    right-hand side is a terminal, except the `EPSILON` keyword.
    """
    parsed = _split_rules(text)
    lhs_names = {lhs for _, lhs, _ in parsed}

    def symbol(name: str) -> Symbol:
        if name == EPSILON_NAME:
            return EPSILON
        kind = SymbolKind.NONTERMINAL if name in lhs_names else SymbolKind.TERMINAL
        return Symbol(name, kind)

    rules: dict[Rule, int] = {}
    for lineno, lhs, alternatives in parsed:
        for alt in alternatives:
            rule = Rule(symbol(lhs), tuple(symbol(name) for name in alt))
            if rule in rules:
                logger.warning(
                    "Duplicate rule dropped",
                    extra={"rule": str(rule), "line": lineno, "first_line": rules[rule]},
                )
                continue
            rules[rule] = lineno

    return Grammar(tuple(rules), start=symbol(START_NAME))


def serialize_grammar(g: Grammar) -> str:
    """One rule per line; `parse_grammar` reads it back to an equal grammar."""
    return "".join(f"{rule}\n" for rule in g.rules)


def load_grammar(path: str | Path) -> Grammar:
    grammar_path = Path(path)
    g = parse_grammar(grammar_path.read_text(encoding="utf-8"))
    logger.info(
        "Grammar loaded",
        extra={"path": str(grammar_path), "rules": len(g), "terminals": len(g.terminals)},
    )
    return g


def tokenize(text: str, g: Grammar) -> Sentence:
    """Split on whitespace and map each token to a terminal of `g`."""
    tokens = []
    for position, word in enumerate(text.split()):
        sym = g.terminal_by_name.get(word)
        if sym is None:
            raise UnknownTokenError(word, position)
        tokens.append(sym)
    return Sentence(tuple(tokens))


def load_sentences(path: str | Path, g: Grammar) -> list[Sentence]:
    """
    One sentence per line; blank lines and `#` comment lines are skipped.
    A line holding only `EPSILON` is the empty sentence.
    """
    sentences = []
    for line in Path(path).read_text(encoding="utf-8").splitlines():
        stripped = line.strip()
        if not stripped or stripped.startswith(COMMENT):
            continue
        if stripped == EPSILON_NAME:
            sentences.append(Sentence())
            continue
        sentences.append(tokenize(stripped, g))
    return sentences
