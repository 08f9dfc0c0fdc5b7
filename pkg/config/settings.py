"""Application configuration using Pydantic Settings."""

import os
from pathlib import Path
from typing import Annotated, Optional

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, NoDecode, SettingsConfigDict


class Settings(BaseSettings):
    """Experiment settings loaded from environment variables (prefix LOCALFACTOR_)."""

    model_config = SettingsConfigDict(
        env_prefix="LOCALFACTOR_",
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
    )

    # Execution
    threads: Optional[int] = Field(
        default=None, ge=1, description="Worker threads (None = all cores)"
    )
    trial_block_size: int = Field(default=65536, ge=1)
    max_block_cells: int = Field(
        default=2_000_000,
        ge=1,
        description="Upper bound on labels materialized per Monte Carlo block",
    )
    max_tree_vertices: int = Field(default=2_000_000, ge=1)

    # Output
    output_dir: Path = Field(default=Path("./results"))
    log_level: str = Field(default="INFO")

    # Moments / window solver
    zhat_grid_points: int = Field(default=2001, ge=3)
    window_d_start: int = Field(default=3, ge=3)
    window_d_ceiling: int = Field(default=2**40, ge=3)
    default_window_d: int = Field(default=1000, ge=3)
    theory_tolerance: float = Field(default=1e-6, ge=0)

    # Coupling
    bisection_max_iterations: int = Field(default=60, ge=1)
    default_p_grid: Annotated[list[float], NoDecode] = Field(default=[i / 20 for i in range(21)])

    @field_validator("default_p_grid", mode="before")
    @classmethod
    def parse_p_grid(cls, v: str | list[float]) -> list[float]:
        """Parse p grid from comma-separated string."""
        if isinstance(v, str):
            return [float(p.strip()) for p in v.split(",") if p.strip()]
        return v

    def resolved_threads(self) -> int:
        """Thread count to use; falls back to the machine's core count."""
        if self.threads is not None:
            return self.threads
        return os.cpu_count() or 1


# Global settings instance
settings = Settings()
