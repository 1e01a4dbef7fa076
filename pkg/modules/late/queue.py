import random
from collections import deque
from enum import Enum
from typing import Generic, Optional, TypeVar

T = TypeVar("T")


class QueuePolicy(str, Enum):
    FIFO = "fifo"
    LIFO = "lifo"
    RANDOM = "random"


class WorkQueue(Generic[T]):
    """Pending work with a configurable dispatch order. Not thread-safe."""

    def __init__(self, policy: QueuePolicy = QueuePolicy.FIFO, seed: Optional[int] = None):
        self.policy = QueuePolicy(policy)
        self._items: deque[T] = deque()
        self._rng = random.Random(seed)

    def push(self, item: T) -> None:
        self._items.append(item)

    def pop(self) -> T:
        if self.policy is QueuePolicy.FIFO:
            return self._items.popleft()
        if self.policy is QueuePolicy.RANDOM:
            # Swap a random entry to the end, then pop it
            index = self._rng.randrange(len(self._items))
            self._items[index], self._items[-1] = self._items[-1], self._items[index]
        return self._items.pop()

    def __len__(self) -> int:
        return len(self._items)

    def __bool__(self) -> bool:
        return bool(self._items)
