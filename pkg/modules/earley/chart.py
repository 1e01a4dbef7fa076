from typing import Iterator, NamedTuple, Optional

from modules.grammar.schemas import Rule, Symbol


class Item(NamedTuple):
    """A dotted rule with its origin position: (S -> α • β, i)."""

    rule: Rule
    dot: int
    origin: int

    @property
    def next_symbol(self) -> Optional[Symbol]:
        rhs = self.rule.rhs
        return rhs[self.dot] if self.dot < len(rhs) else None

    @property
    def is_finished(self) -> bool:
        return self.dot == len(self.rule.rhs)

    def advance(self) -> "Item":
        return Item(self.rule, self.dot + 1, self.origin)

    def __str__(self) -> str:
        return f"({self.rule.dotted(self.dot)}, {self.origin})"


class EarleyChart:
    """
    One insertion-ordered item set per input position 0..|W|.

    Each set is a list (the work list, processed by index while it grows)
    plus a membership set.
    """

    def __init__(self, length: int):
        self.sets: list[list[Item]] = [[] for _ in range(length + 1)]
        self._members: list[set[Item]] = [set() for _ in range(length + 1)]
        self.dispatches = 0

    def add(self, k: int, item: Item) -> bool:
        """Insert `item` into set k; False when it was already there."""
        members = self._members[k]
        if item in members:
            return False
        members.add(item)
        self.sets[k].append(item)
        return True

    def contains(self, k: int, item: Item) -> bool:
        return item in self._members[k]

    @property
    def length(self) -> int:
        return len(self.sets) - 1

    def __len__(self) -> int:
        return sum(len(s) for s in self.sets)

    def __iter__(self) -> Iterator[tuple[int, Item]]:
        for k, items in enumerate(self.sets):
            for item in items:
                yield k, item
