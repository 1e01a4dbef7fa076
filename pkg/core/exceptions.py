from typing import Iterable, Sequence


class LateChartError(Exception):
    """Base class for every error the library raises on purpose."""

    exit_code: int = 2


class GrammarError(LateChartError, ValueError):
    pass


class GrammarSyntaxError(GrammarError):
    def __init__(self, line: int, message: str):
        self.line = line
        self.message = message
        super().__init__(f"line {line}: {message}")


class UndefinedNonterminalError(GrammarError):
    def __init__(self, names: Iterable[str]):
        self.names = tuple(sorted(names))
        super().__init__(f"undefined nonterminal(s): {', '.join(self.names)}")


class MissingStartError(GrammarError):
    def __init__(self, start: str = "START"):
        super().__init__(f"grammar has no rule for the start symbol {start}")


class ReplicationLimitError(GrammarError):
    def __init__(self, predicted: int, cap: int):
        self.predicted = predicted
        self.cap = cap
        super().__init__(f"replication would produce {predicted} rules (cap {cap})")


class UnknownTokenError(LateChartError, ValueError):
    def __init__(self, token: str, position: int):
        self.token = token
        self.position = position
        super().__init__(f"unknown token {token!r} at position {position}")


class EarleyRejectionError(LateChartError):
    """The classic Earley engine refuses grammars with ε-rules."""

    exit_code = 3

    def __init__(self, offending: Sequence[object]):
        self.offending = tuple(offending)
        listing = "; ".join(str(rule) for rule in self.offending)
        super().__init__(f"earley engine rejects epsilon rules: {listing}")


class ParallelParseError(LateChartError):
    exit_code = 3


class OracleLimitError(LateChartError, ValueError):
    def __init__(self, length: int, cap: int):
        super().__init__(f"sentence of length {length} exceeds the oracle cap {cap}")


class BenchmarkError(LateChartError, ValueError):
    pass


class TargetUnreachableError(BenchmarkError):
    def __init__(self, target: int, available: int):
        self.target = target
        self.available = available
        super().__init__(f"target of {target} items unreachable; full sentence yields {available}")


class MonotonicityError(BenchmarkError):
    pass
