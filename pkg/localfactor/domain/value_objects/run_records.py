"""Per-trial records of rule runs on sampled graphs."""

from dataclasses import dataclass
from typing import Optional

import numpy as np


@dataclass(frozen=True, eq=False)
class RuleRun:
    """Output of one rule run: accepted vertex ids (ascending) and tie count."""

    members: np.ndarray
    ties: int

    @property
    def size(self) -> int:
        """|I|."""
        return int(self.members.size)


@dataclass(frozen=True)
class RunRecord:
    """One measure_run trial."""

    trial: int
    size: int
    ties: int
    non_tree: Optional[int]
    loops: int
    multi_edges: int


@dataclass(frozen=True)
class OverlapRecord:
    """One overlap_experiment trial: |I cap J|, |I|, |J| on a shared graph."""

    trial: int
    intersection: int
    size_x: int
    size_y: int
    ties: int
    non_tree: Optional[int]
    loops: int
    multi_edges: int

    def __post_init__(self) -> None:
        """Validate sizes."""
        if self.intersection > min(self.size_x, self.size_y):
            raise ValueError("Intersection cannot exceed either set")
