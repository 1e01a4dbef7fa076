from abc import ABC, abstractmethod
from enum import Enum
from typing import Any, Callable

from modules.grammar.schemas import Grammar, Sentence
from modules.verify.canonical import CanonicalChart


class EngineName(str, Enum):
    EARLEY = "earley"
    LATE_SERIAL = "late-serial"
    LATE_PARALLEL = "late-parallel"


class BaseEngine(ABC):
    """Abstract base class for recognition engines."""

    name: EngineName

    @abstractmethod
    def prepare(self, g: Grammar, w: Sentence) -> Callable[[], Any]:
        """
        Do every piece of setup that is not chart construction.

        Args:
            g: The grammar to recognize with.
            w: The tokenized sentence.

        Returns:
            A zero-argument callable that builds the chart and returns it.
            Benchmarks time only this callable.
        """

    @abstractmethod
    def recognize(self, chart: Any, g: Grammar, w: Sentence) -> bool:
        pass

    @abstractmethod
    def canonical(self, chart: Any) -> CanonicalChart:
        pass

    @property
    def workers(self) -> int:
        """Threads the engine runs chart construction on."""
        return 1

    @property
    def processors(self) -> int:
        """The p used in efficiency figures."""
        return 1

    def parse(self, g: Grammar, w: Sentence) -> Any:
        return self.prepare(g, w)()
