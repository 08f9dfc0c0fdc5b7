"""Configuration-model sample entity."""

from dataclasses import dataclass

import numpy as np

from localfactor.domain.entities.graph import Graph
from localfactor.domain.errors.domain_errors import InvalidGraphError, ParityError


@dataclass(frozen=True, eq=False)
class RegularSample:
    """
    One configuration-model draw.

    Replica i belongs to vertex i // d. `matching` holds nd/2 replica pairs;
    `graph` is its simple projection (loops dropped, parallel edges merged).
    """

    graph: Graph
    n: int
    d: int
    matching: np.ndarray
    loop_count: int
    multi_edge_count: int

    def __post_init__(self) -> None:
        """Validate sample invariants."""
        if (self.n * self.d) % 2 != 0:
            raise ParityError(f"n*d must be even (n={self.n}, d={self.d})")
        matching = np.asarray(self.matching, dtype=np.int64)
        if matching.shape != (self.n * self.d // 2, 2):
            raise InvalidGraphError("Matching must contain exactly nd/2 replica pairs")
        if not np.array_equal(np.sort(matching, axis=None), np.arange(self.n * self.d)):
            raise InvalidGraphError("Matching must use every replica exactly once")
        if self.graph.n != self.n:
            raise InvalidGraphError("Projected graph has the wrong vertex count")
        if self.graph.n and int(self.graph.degrees().max(initial=0)) > self.d:
            raise InvalidGraphError("Projected degree cannot exceed d")
        if self.loop_count < 0 or self.multi_edge_count < 0:
            raise InvalidGraphError("Defect counts cannot be negative")
        matching.setflags(write=False)
        object.__setattr__(self, "matching", matching)

    @property
    def is_simple(self) -> bool:
        """True iff the multigraph had neither loops nor parallel edges."""
        return self.loop_count == 0 and self.multi_edge_count == 0

    def multigraph_degrees(self) -> np.ndarray:
        """Degree of every vertex before projection (loops count twice)."""
        owners = self.matching // self.d
        return np.bincount(owners.ravel(), minlength=self.n)

    def __repr__(self) -> str:
        """Debug representation."""
        return (
            f"RegularSample(n={self.n}, d={self.d}, loops={self.loop_count}, "
            f"multi={self.multi_edge_count})"
        )
