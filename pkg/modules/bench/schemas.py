import math
from pathlib import Path
from typing import List, Optional

import yaml
from pydantic import BaseModel, Field, model_validator

from core.engine import EngineName
from core.exceptions import BenchmarkError
from .metrics import compute_efficiency, compute_speedup

# Runtime protocol: 100 trials, or fewer once the total exceeds one second
MIN_TRIALS = 100
MIN_TOTAL_SECONDS = 1.0


class BenchResult(BaseModel):
    engine: EngineName
    workers: int = Field(..., ge=1)
    trials: int = Field(..., ge=1)
    total_time: float = Field(..., ge=0.0, description="Seconds across all timed trials")
    mean_time: float = Field(..., ge=0.0, description="total_time / trials")
    chart_items: int = Field(..., ge=0)
    grammar_id: str
    sentence_id: str
    processors: int = Field(1, ge=1, description="p used for efficiency")

    @model_validator(mode="after")
    def _protocol(self) -> "BenchResult":
        if self.trials < MIN_TRIALS and self.total_time < MIN_TOTAL_SECONDS:
            raise ValueError(
                f"{self.trials} trials totalling {self.total_time:.3f}s violates the runtime protocol"
            )
        if not math.isclose(self.mean_time, self.total_time / self.trials, rel_tol=1e-9, abs_tol=1e-15):
            raise ValueError("mean_time must equal total_time / trials")
        return self


class Metrics(BaseModel):
    """Derived figures for one measurement; every present value is positive."""

    efficiency: float = Field(..., gt=0, description="Chart items per second per processor")
    speedup_vs_earley: Optional[float] = Field(None, gt=0)
    speedup_vs_late_serial: Optional[float] = Field(None, gt=0)
    # Parallel efficiency as a fraction of serial LATE efficiency on the same input
    efficiency_vs_serial: Optional[float] = Field(None, gt=0)

    @classmethod
    def derive(
        cls,
        chart_items: int,
        processors: int,
        mean_s: float,
        *,
        earley_s: Optional[float] = None,
        serial_s: Optional[float] = None,
        serial_efficiency: Optional[float] = None,
    ) -> "Metrics":
        efficiency = compute_efficiency(chart_items, processors, mean_s)
        return cls(
            efficiency=efficiency,
            speedup_vs_earley=None if earley_s is None else compute_speedup(mean_s, earley_s),
            speedup_vs_late_serial=None if serial_s is None else compute_speedup(mean_s, serial_s),
            efficiency_vs_serial=None if serial_efficiency is None else efficiency / serial_efficiency,
        )


CSV_HEADER = [
    "engine",
    "workers",
    "grammar_id",
    "sentence_id",
    "trials",
    "total_s",
    "mean_s",
    "chart_items",
    "speedup_vs_earley",
    "speedup_vs_late_serial",
    "efficiency_items_per_s_per_p",
    "processors",
    "efficiency_vs_serial",
    "error",
]


class BenchRow(BaseModel):
    engine: EngineName
    workers: int
    grammar_id: str
    sentence_id: str
    trials: Optional[int] = None
    total_s: Optional[float] = None
    mean_s: Optional[float] = None
    chart_items: Optional[int] = None
    speedup_vs_earley: Optional[float] = None
    speedup_vs_late_serial: Optional[float] = None
    efficiency_items_per_s_per_p: Optional[float] = None
    processors: Optional[int] = None
    # Parallel efficiency as a fraction of serial LATE efficiency on the same input
    efficiency_vs_serial: Optional[float] = None
    error: Optional[str] = None

    @classmethod
    def from_result(cls, result: BenchResult) -> "BenchRow":
        return cls(
            engine=result.engine,
            workers=result.workers,
            grammar_id=result.grammar_id,
            sentence_id=result.sentence_id,
            trials=result.trials,
            total_s=result.total_time,
            mean_s=result.mean_time,
            chart_items=result.chart_items,
            processors=result.processors,
        )

    def apply(self, metrics: Metrics) -> None:
        self.efficiency_items_per_s_per_p = metrics.efficiency
        self.speedup_vs_earley = metrics.speedup_vs_earley
        self.speedup_vs_late_serial = metrics.speedup_vs_late_serial
        self.efficiency_vs_serial = metrics.efficiency_vs_serial


SWEEP_HEADER = ["replicas", "engine", "workers", "sentence_id", "trials", "mean_s", "chart_items", "items_per_s"]


class SweepRow(BaseModel):
    replicas: int
    engine: EngineName
    workers: int
    sentence_id: str
    trials: int
    mean_s: float
    chart_items: int
    items_per_s: float


class SerialScalingRow(BaseModel):
    prefix_length: int
    chart_items: int
    mean_s: float
    # Smallest problem's time scaled linearly by chart size
    expected_s: float


SERIAL_SCALING_HEADER = list(SerialScalingRow.model_fields)


class WeakScalingRow(BaseModel):
    workers: int
    processors: int
    target_items: int
    prefix_length: int
    chart_items: int
    mean_s: float
    serial_mean_s: float
    efficiency: float
    serial_efficiency: float
    efficiency_vs_serial: float


WEAK_SCALING_HEADER = list(WeakScalingRow.model_fields)


class SuiteGrammar(BaseModel):
    id: str
    path: str
    replicate: int = Field(1, ge=1)
    wrap: bool = False


class SuiteSentence(BaseModel):
    id: str
    grammar: str
    text: Optional[str] = None
    path: Optional[str] = None

    @model_validator(mode="after")
    def _one_source(self) -> "SuiteSentence":
        if (self.text is None) == (self.path is None):
            raise ValueError(f"sentence {self.id!r} needs exactly one of text or path")
        return self


class SuiteSpec(BaseModel):
    grammars: List[SuiteGrammar]
    sentences: List[SuiteSentence]
    engines: List[EngineName] = [EngineName.EARLEY, EngineName.LATE_SERIAL, EngineName.LATE_PARALLEL]
    workers: List[int] = [1, 2, 4]
    base_dir: Path = Path(".")

    @model_validator(mode="after")
    def _references(self) -> "SuiteSpec":
        grammar_ids = [g.id for g in self.grammars]
        duplicates = sorted({gid for gid in grammar_ids if grammar_ids.count(gid) > 1})
        if duplicates:
            raise ValueError(f"duplicate grammar ids: {', '.join(duplicates)}")
        dangling = sorted({s.grammar for s in self.sentences} - set(grammar_ids))
        if dangling:
            raise ValueError(f"sentences name undefined grammar ids: {', '.join(dangling)}")
        return self

    @classmethod
    def load_from_yaml(cls, path: str | Path) -> "SuiteSpec":
        suite_path = Path(path)
        if not suite_path.exists():
            raise FileNotFoundError(f"Suite file not found at {path}")

        with open(suite_path, "r", encoding="utf-8") as f:
            try:
                suite_data = yaml.safe_load(f)
            except yaml.YAMLError as exc:
                raise BenchmarkError(f"Suite file {path} is not valid YAML: {exc}") from exc
        if not isinstance(suite_data, dict):
            raise BenchmarkError(f"Suite file {path} must hold a mapping")

        # Relative fixture paths resolve against the suite file
        suite_data.setdefault("base_dir", str(suite_path.parent))
        return cls(**suite_data)

    def resolve(self, relative: str) -> Path:
        candidate = Path(relative)
        return candidate if candidate.is_absolute() else self.base_dir / candidate
