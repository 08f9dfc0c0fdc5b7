"""Rooted neighborhood entity."""

from dataclasses import dataclass
from typing import Optional

import numpy as np

from localfactor.domain.entities.graph import Graph


@dataclass(frozen=True, eq=False)
class NeighborhoodView:
    """
    Ball B(root, radius) of a source graph.

    `vertices` and `distances` are aligned and ordered by (distance, id);
    `induced_edges` lists source-graph ids (u < v) of every edge inside the ball.
    """

    root: int
    radius: int
    vertices: np.ndarray
    distances: np.ndarray
    induced_edges: np.ndarray
    labels: Optional[np.ndarray] = None

    def __post_init__(self) -> None:
        """Validate view invariants."""
        if (
            self.vertices.size == 0
            or int(self.vertices[0]) != self.root
            or int(self.distances[0]) != 0
        ):
            raise ValueError("Root must be the first vertex, at distance 0")
        if np.any(self.distances > self.radius):
            raise ValueError("Every vertex must lie within the radius")
        if self.labels is not None and self.labels.shape != self.vertices.shape:
            raise ValueError("Labels must align with vertices")

    @property
    def size(self) -> int:
        """Number of vertices in the ball."""
        return int(self.vertices.size)

    def local_graph(self) -> Graph:
        """
        The ball as a standalone graph; local id i is vertices[i], root is 0.
        """
        if self.induced_edges.size == 0:
            return Graph.empty(self.size)
        position = {int(v): i for i, v in enumerate(self.vertices)}
        local = np.array(
            [(position[int(u)], position[int(v)]) for u, v in self.induced_edges], dtype=np.int64
        )
        return Graph.from_edges(self.size, local)

    def as_items(self) -> list[tuple[int, int]]:
        """(vertex id, distance) pairs in view order."""
        return [(int(v), int(r)) for v, r in zip(self.vertices, self.distances)]
