from dataclasses import dataclass
from typing import NamedTuple, Union

from modules.earley.chart import EarleyChart
from modules.late.schemas import GlobalChart


class ChartEntry(NamedTuple):
    """One item in engine-neutral form: (k, lhs, rhs, dot, origin)."""

    k: int
    lhs: str
    rhs: tuple[str, ...]
    dot: int
    origin: int

    def render(self) -> str:
        dotted = " ".join([self.lhs, "->", *self.rhs[: self.dot], "•", *self.rhs[self.dot :]])
        return f"{self.k}\t{dotted}\t{self.origin}"


@dataclass(frozen=True)
class CanonicalChart:
    items: tuple[ChartEntry, ...] = ()

    def __post_init__(self):
        if any(a >= b for a, b in zip(self.items, self.items[1:])):
            raise ValueError("canonical chart entries must be strictly sorted")

    def __len__(self) -> int:
        return len(self.items)

    def __iter__(self):
        return iter(self.items)


def _entry(k: int, rule, dot: int, origin: int) -> ChartEntry:
    return ChartEntry(k, rule.lhs.name, tuple(sym.name for sym in rule.rhs), dot, origin)


def canonicalize_earley(chart: EarleyChart) -> CanonicalChart:
    """Embed per-position sets into one global set: (rule, dot, i) in set k -> (k, rule, dot, i)."""
    return CanonicalChart(tuple(sorted(_entry(k, item.rule, item.dot, item.origin) for k, item in chart)))


def canonicalize_late(chart: Union[GlobalChart, CanonicalChart]) -> CanonicalChart:
    if isinstance(chart, CanonicalChart):
        return chart
    return CanonicalChart(
        tuple(sorted(_entry(item.current, item.rule, item.dot, item.origin) for item in chart.items))
    )


def canonicalize(chart: Union[EarleyChart, GlobalChart, CanonicalChart]) -> CanonicalChart:
    if isinstance(chart, EarleyChart):
        return canonicalize_earley(chart)
    return canonicalize_late(chart)


@dataclass(frozen=True)
class ChartDiff:
    equal: bool
    only_in_a: tuple[ChartEntry, ...] = ()
    only_in_b: tuple[ChartEntry, ...] = ()

    def __bool__(self) -> bool:
        return self.equal

    def render(self) -> str:
        lines = [f"-\t{entry.render()}" for entry in self.only_in_a]
        lines += [f"+\t{entry.render()}" for entry in self.only_in_b]
        return "\n".join(lines)


def charts_equal(a: CanonicalChart, b: CanonicalChart) -> ChartDiff:
    if a.items == b.items:
        return ChartDiff(True)
    left, right = set(a.items), set(b.items)
    return ChartDiff(False, tuple(sorted(left - right)), tuple(sorted(right - left)))


def render_chart(chart: CanonicalChart) -> str:
    """The chart dump: `k<TAB>LHS -> pre • post<TAB>origin`, one item per line."""
    return "".join(f"{entry.render()}\n" for entry in chart.items)
