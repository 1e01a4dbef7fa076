from typing import Literal, Optional

from pydantic import BaseModel, Field

from core.config import QueuePolicyName


class CliConfig(BaseModel):
    subcommand: str
    grammar_path: Optional[str] = None
    sentence: Optional[str] = Field(None, description="Inline sentence; wins over sentence_path")
    sentence_path: Optional[str] = None
    engine: Literal["earley", "late", "late-parallel"] = "late"
    workers: Optional[int] = Field(None, ge=1)
    queue_policy: Optional[QueuePolicyName] = None
    seed: Optional[int] = None
    output: Optional[str] = None
