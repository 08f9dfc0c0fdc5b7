"""Canonical rooted tree T_{d,r}."""

from dataclasses import dataclass

import numpy as np

from localfactor.domain.entities.graph import Graph
from localfactor.domain.errors.domain_errors import InvalidDegreeError


def canonical_vertex_count(d: int, r: int) -> int:
    """
    Number of vertices of T_{d,r}.

    1 + d((d-1)^r - 1)/(d-2) in general; 2r + 1 for the path case d = 2.
    """
    if r < 0 or d < 0:
        raise InvalidDegreeError(f"Depth and degree must be nonnegative (d={d}, r={r})")
    if r == 0:
        return 1
    if d == 2:
        return 2 * r + 1
    return 1 + d * ((d - 1) ** r - 1) // (d - 2)


@dataclass(frozen=True, eq=False)
class CanonicalTree:
    """
    T_{d,r} with the root at vertex 0.

    Ids are assigned breadth-first; the children of each vertex get
    consecutive ids. `depths[v]` is the distance of v from the root.
    """

    d: int
    r: int
    graph: Graph
    depths: np.ndarray

    def __post_init__(self) -> None:
        """Validate tree shape."""
        if self.d < 2:
            raise InvalidDegreeError(f"Canonical tree needs d >= 2, got {self.d}")
        if self.graph.n != canonical_vertex_count(self.d, self.r):
            raise ValueError("Vertex count does not match T_{d,r}")
        if self.graph.edge_count != self.graph.n - 1:
            raise ValueError("A tree has exactly n-1 edges")

    @classmethod
    def build(cls, d: int, r: int) -> "CanonicalTree":
        """
        Build T_{d,r}.

        Raises:
            InvalidDegreeError: If d < 2 or r < 0
        """
        if d < 2:
            raise InvalidDegreeError(f"Canonical tree needs d >= 2, got {d}")
        if r < 0:
            raise InvalidDegreeError(f"Depth cannot be negative, got {r}")

        parents: list[np.ndarray] = []
        depths = [np.zeros(1, dtype=np.int64)]
        level = np.zeros(1, dtype=np.int64)
        next_id = 1
        for depth in range(1, r + 1):
            fanout = d if depth == 1 else d - 1
            parent = np.repeat(level, fanout)
            level = np.arange(next_id, next_id + parent.size, dtype=np.int64)
            next_id += parent.size
            parents.append(parent)
            depths.append(np.full(level.size, depth, dtype=np.int64))

        n = next_id
        if parents:
            parent_ids = np.concatenate(parents)
            graph = Graph.from_unique_pairs(n, parent_ids, np.arange(1, n, dtype=np.int64))
        else:
            graph = Graph.empty(n)
        depth_arr = np.concatenate(depths)
        depth_arr.setflags(write=False)
        return cls(d=d, r=r, graph=graph, depths=depth_arr)

    @property
    def n(self) -> int:
        """Vertex count."""
        return self.graph.n

    def __repr__(self) -> str:
        """Debug representation."""
        return f"CanonicalTree(d={self.d}, r={self.r}, n={self.n})"
