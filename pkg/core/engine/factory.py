from typing import Optional

from modules.parallel import ParallelConfig
from .base import BaseEngine, EngineName
from .earley_engine import EarleyEngine
from .late_engine import LateEngine, ParallelLateEngine

# CLI spelling -> engine
_ALIASES = {
    "earley": EngineName.EARLEY,
    "late": EngineName.LATE_SERIAL,
    "late-serial": EngineName.LATE_SERIAL,
    "late-parallel": EngineName.LATE_PARALLEL,
}


class EngineFactory:
    @classmethod
    def resolve(cls, name: str | EngineName) -> EngineName:
        if isinstance(name, EngineName):
            return name
        try:
            return _ALIASES[name.lower()]
        except KeyError:
            raise ValueError(f"Unsupported engine: {name}") from None

    @classmethod
    def get_engine(cls, name: str | EngineName, config: Optional[ParallelConfig] = None) -> BaseEngine:
        engine = cls.resolve(name)
        config = config or ParallelConfig()

        if engine is EngineName.EARLEY:
            return EarleyEngine()
        if engine is EngineName.LATE_SERIAL:
            return LateEngine(config.queue_policy, config.seed)
        return ParallelLateEngine(config)
