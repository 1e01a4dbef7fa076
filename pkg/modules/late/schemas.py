from collections import defaultdict
from typing import Iterator, NamedTuple, Optional

from modules.grammar.schemas import Rule, Symbol
from .queue import QueuePolicy, WorkQueue


class LateItem(NamedTuple):
    """(S -> α • β, i, k): a dotted rule with origin i and current position k."""

    rule: Rule
    dot: int
    origin: int
    current: int

    @property
    def next_symbol(self) -> Optional[Symbol]:
        rhs = self.rule.rhs
        return rhs[self.dot] if self.dot < len(rhs) else None

    @property
    def is_finished(self) -> bool:
        return self.dot == len(self.rule.rhs)

    def advance(self, current: int) -> "LateItem":
        return LateItem(self.rule, self.dot + 1, self.origin, current)

    def __str__(self) -> str:
        return f"({self.rule.dotted(self.dot)}, {self.origin}, {self.current})"


class GlobalChart:
    """The single item set of LATE, plus the queue of items not yet dispatched."""

    def __init__(self, policy: QueuePolicy = QueuePolicy.FIFO, seed: Optional[int] = None):
        self.items: set[LateItem] = set()
        self.pending: WorkQueue[LateItem] = WorkQueue(policy, seed)
        self.dispatches = 0

    def insert(self, item: LateItem) -> bool:
        """Add and enqueue `item` on first sight; report whether it was new."""
        if item in self.items:
            return False
        self.items.add(item)
        self.pending.push(item)
        return True

    def __contains__(self, item: LateItem) -> bool:
        return item in self.items

    def __len__(self) -> int:
        return len(self.items)

    def __iter__(self) -> Iterator[LateItem]:
        return iter(self.items)


RequestKey = tuple[Symbol, int]
CompletedTriple = tuple[Symbol, int, int]


class ParseTables:
    """
    Requests map Q, replies map P and completed set D.

    Every mutation is an insert that reports what it saw, so a concurrent
    subclass only has to make each method atomic.
    """

    def __init__(self):
        self.requests: defaultdict[RequestKey, set[LateItem]] = defaultdict(set)
        self.replies: defaultdict[RequestKey, set[int]] = defaultdict(set)
        self.completed: set[CompletedTriple] = set()

    def register_request(self, key: RequestKey, item: LateItem) -> bool:
        """Add `item` to Q[key]; True iff Q[key] was empty before."""
        waiting = self.requests[key]
        was_first = not waiting
        waiting.add(item)
        return was_first

    def replies_at(self, key: RequestKey) -> tuple[int, ...]:
        return tuple(self.replies.get(key, ()))

    def claim_completion(self, triple: CompletedTriple) -> bool:
        """Add `triple` to D; True iff it was absent."""
        if triple in self.completed:
            return False
        self.completed.add(triple)
        return True

    def add_reply(self, key: RequestKey, end: int) -> None:
        self.replies[key].add(end)

    def requests_at(self, key: RequestKey) -> tuple[LateItem, ...]:
        return tuple(self.requests.get(key, ()))
