"""Report schema."""

from datetime import datetime
from typing import Any

from pydantic import BaseModel, Field


class Report(BaseModel):
    """Inputs, outputs and provenance of one CLI invocation."""

    command: str
    config: dict[str, Any]
    versions: dict[str, str]
    started_at: datetime
    wall_time_seconds: float = Field(..., ge=0)
    outputs: dict[str, Any] = Field(default_factory=dict)
    criteria: dict[str, bool] = Field(default_factory=dict)
    output_files: list[str] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        """True when every recorded criterion passed."""
        return all(self.criteria.values())
