from .base import BaseEngine, EngineName
from .earley_engine import EarleyEngine
from .late_engine import LateEngine, ParallelLateEngine
from .factory import EngineFactory

__all__ = ["BaseEngine", "EngineName", "EarleyEngine", "LateEngine", "ParallelLateEngine", "EngineFactory"]
