import logging
from dataclasses import dataclass

from core.exceptions import MonotonicityError, TargetUnreachableError
from modules.grammar import Grammar, Sentence
from modules.late import late_parse

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class WeakScalingPrefix:
    sentence: Sentence
    chart_items: int
    target: int

    @property
    def length(self) -> int:
        return len(self.sentence)

    @property
    def residual(self) -> int:
        return self.chart_items - self.target


def chart_items(g: Grammar, w: Sentence) -> int:
    return len(late_parse(g, w))


def check_monotonic(g: Grammar, w: Sentence) -> list[int]:
    """Item counts for every prefix; raises if any prefix has fewer items than a shorter one."""
    counts = [chart_items(g, w.prefix(length)) for length in range(len(w) + 1)]
    for length in range(1, len(counts)):
        if counts[length] < counts[length - 1]:
            raise MonotonicityError(
                f"prefix {length} has {counts[length]} items, prefix {length - 1} has {counts[length - 1]}"
            )
    return counts


def find_weak_scaling_prefix(
    g: Grammar, w: Sentence, target_items: int, *, verify_monotonic: bool = True
) -> WeakScalingPrefix:
    """
    Binary-search the prefix of `w` whose chart size is closest to
    `target_items`; ties go to the shorter prefix.

    Relies on chart size never shrinking as the prefix grows. By default
    every prefix is counted and checked before the search; with
    `verify_monotonic=False` only the prefixes the search visits are
    counted and compared.
    """
    counted: dict[int, int] = dict(enumerate(check_monotonic(g, w))) if verify_monotonic else {}

    def count(length: int) -> int:
        if length not in counted:
            counted[length] = chart_items(g, w.prefix(length))
            ordered = [counted[k] for k in sorted(counted)]
            if any(a > b for a, b in zip(ordered, ordered[1:])):
                raise MonotonicityError(f"chart size decreased between searched prefixes {sorted(counted)}")
        return counted[length]

    full = count(len(w))
    if full < target_items:
        raise TargetUnreachableError(target_items, full)

    def shortest_reaching(items: int, hi: int) -> int:
        lo = 0
        while lo < hi:
            mid = (lo + hi) // 2
            if count(mid) >= items:
                hi = mid
            else:
                lo = mid + 1
        return lo

    best = shortest_reaching(target_items, len(w))
    if best > 0 and target_items - count(best - 1) <= count(best) - target_items:
        # Below-target neighbour wins; take the shortest prefix with its count
        best = shortest_reaching(count(best - 1), best - 1)

    result = WeakScalingPrefix(w.prefix(best), count(best), target_items)
    logger.info(
        "Weak scaling prefix selected",
        extra={"target": target_items, "length": result.length, "items": result.chart_items, "counted": len(counted)},
    )
    return result


def build_weak_scaling_series(
    g: Grammar, w: Sentence, base_items: int, max_workers: int
) -> list[tuple[int, WeakScalingPrefix]]:
    """Inputs of p * base_items chart items for p = 1..max_workers."""
    check_monotonic(g, w)
    return [
        (p, find_weak_scaling_prefix(g, w, p * base_items, verify_monotonic=False))
        for p in range(1, max_workers + 1)
    ]
