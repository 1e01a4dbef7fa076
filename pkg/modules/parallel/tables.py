import threading
from typing import Optional

from modules.late.queue import QueuePolicy
from modules.late.schemas import CompletedTriple, GlobalChart, LateItem, ParseTables, RequestKey


class ConcurrentParseTables(ParseTables):
    """ParseTables whose insert-and-report operations are linearizable."""

    def __init__(self):
        super().__init__()
        self._requests_lock = threading.Lock()
        self._replies_lock = threading.Lock()
        self._completed_lock = threading.Lock()

    def register_request(self, key: RequestKey, item: LateItem) -> bool:
        with self._requests_lock:
            return super().register_request(key, item)

    def requests_at(self, key: RequestKey) -> tuple[LateItem, ...]:
        with self._requests_lock:
            return super().requests_at(key)

    def add_reply(self, key: RequestKey, end: int) -> None:
        with self._replies_lock:
            super().add_reply(key, end)

    def replies_at(self, key: RequestKey) -> tuple[int, ...]:
        with self._replies_lock:
            return super().replies_at(key)

    def claim_completion(self, triple: CompletedTriple) -> bool:
        with self._completed_lock:
            return super().claim_completion(triple)


def atomic_request_register(t: ParseTables, key: RequestKey, item: LateItem) -> bool:
    """Add `item` to requests[key]; exactly one caller per key ever gets True."""
    return t.register_request(key, item)


def atomic_complete_claim(t: ParseTables, triple: CompletedTriple) -> bool:
    """Claim a completed (S, i, k) triple; exactly one claimant per triple wins."""
    return t.claim_completion(triple)


class ConcurrentGlobalChart(GlobalChart):
    """
    Global chart shared by the workers.

    A single condition guards the item set, the pending queue and the
    outstanding-work counter. An item counts as outstanding from insertion
    until its dispatch has finished, so the counter only reaches zero once
    the queue is empty and no worker is mid-dispatch.
    """

    def __init__(self, policy: QueuePolicy = QueuePolicy.FIFO, seed: Optional[int] = None):
        super().__init__(policy, seed)
        self._cond = threading.Condition()
        self._outstanding = 0
        self._aborted = False

    def insert(self, item: LateItem) -> bool:
        with self._cond:
            if not super().insert(item):
                return False
            self._outstanding += 1
            self._cond.notify()
            return True

    def take(self, limit: int) -> list[LateItem]:
        """Block for work; an empty list means quiescence or abort."""
        with self._cond:
            while not self.pending and self._outstanding and not self._aborted:
                self._cond.wait()
            if self._aborted or not self.pending:
                return []
            return [self.pending.pop() for _ in range(min(limit, len(self.pending)))]

    def task_done(self, count: int) -> None:
        with self._cond:
            self._outstanding -= count
            self.dispatches += count
            if self._outstanding == 0:
                self._cond.notify_all()

    def abort(self) -> None:
        with self._cond:
            self._aborted = True
            self._cond.notify_all()

    @property
    def outstanding(self) -> int:
        with self._cond:
            return self._outstanding
