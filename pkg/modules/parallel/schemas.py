from typing import Optional

from pydantic import BaseModel, ConfigDict, Field

from core.config import Settings
from modules.late.queue import QueuePolicy


class ParallelConfig(BaseModel):
    model_config = ConfigDict(frozen=True)

    workers: int = Field(1, ge=1, description="Worker threads (p)")
    queue_policy: QueuePolicy = Field(QueuePolicy.FIFO, description="Shared queue dispatch order")
    seed: Optional[int] = Field(None, description="Seed for the random policy")
    batch_size: int = Field(1, ge=1, description="Items a worker takes per queue visit")

    @classmethod
    def from_settings(cls, settings: Settings, workers: Optional[int] = None) -> "ParallelConfig":
        return cls(
            workers=settings.resolve_workers(workers),
            queue_policy=QueuePolicy(settings.queue_policy),
            seed=settings.queue_seed,
            batch_size=settings.batch_size,
        )
