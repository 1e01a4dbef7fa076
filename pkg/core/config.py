from typing import Literal, Optional

from pydantic import Field, ValidationError
from pydantic_settings import BaseSettings, SettingsConfigDict

QueuePolicyName = Literal["fifo", "lifo", "random"]


class Settings(BaseSettings):
    """
    Runtime settings, read from LATECHART_* environment variables.
    """

    model_config = SettingsConfigDict(env_prefix="LATECHART_", extra="ignore")

    # Overrides --workers when set (CI matrix runs)
    workers: Optional[int] = Field(default=None, ge=1)
    queue_policy: QueuePolicyName = "fifo"
    queue_seed: Optional[int] = None
    batch_size: int = Field(default=1, ge=1)

    replication_cap: int = Field(default=1_000_000, ge=1)
    oracle_max_tokens: int = Field(default=10, ge=0)

    bench_warmup_runs: int = Field(default=3, ge=0)

    log_level: str = "WARNING"

    def resolve_workers(self, requested: Optional[int]) -> int:
        if self.workers is not None:
            return self.workers
        return requested if requested is not None else 1


# Create a global settings instance
try:
    settings = Settings()
except ValidationError:
    # Library defaults stay usable; the CLI re-reads the environment and
    # reports the error as a usage failure.
    settings = Settings.model_construct()
