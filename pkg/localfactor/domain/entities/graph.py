"""Graph domain entity."""

from collections.abc import Iterable
from dataclasses import dataclass
from functools import cached_property
from typing import Any

import numpy as np
import scipy.sparse as sp

from localfactor.domain.errors.domain_errors import InvalidGraphError, InvalidVertexError


@dataclass(frozen=True, eq=False)
class Graph:
    """
    Immutable simple undirected graph on vertices 0..n-1.

    Adjacency is stored in CSR form: the neighbors of u are
    indices[indptr[u]:indptr[u + 1]], sorted ascending. Both arrays are
    read-only after construction.
    """

    n: int
    indptr: np.ndarray
    indices: np.ndarray

    def __post_init__(self) -> None:
        """Validate simple-graph invariants."""
        if self.n < 0:
            raise InvalidGraphError("Vertex count cannot be negative")
        indptr = np.ascontiguousarray(self.indptr, dtype=np.int64)
        indices = np.ascontiguousarray(self.indices, dtype=np.int64)
        if indptr.shape != (self.n + 1,) or indptr[0] != 0 or indptr[-1] != indices.size:
            raise InvalidGraphError("indptr must have n+1 entries spanning indices")
        if np.any(np.diff(indptr) < 0):
            raise InvalidGraphError("indptr must be nondecreasing")
        if indices.size:
            if indices.min() < 0 or indices.max() >= self.n:
                raise InvalidGraphError("Neighbor id out of range")
            rows = np.repeat(np.arange(self.n, dtype=np.int64), np.diff(indptr))
            if np.any(rows == indices):
                raise InvalidGraphError("Self-loops are not allowed")
            # Strictly increasing inside each row: no duplicates, sorted.
            same_row = rows[1:] == rows[:-1]
            if np.any(indices[1:][same_row] <= indices[:-1][same_row]):
                raise InvalidGraphError("Neighbor lists must be sorted without duplicates")
            forward = np.sort(rows * self.n + indices)
            backward = np.sort(indices * self.n + rows)
            if not np.array_equal(forward, backward):
                raise InvalidGraphError("Adjacency must be symmetric")
        indptr.setflags(write=False)
        indices.setflags(write=False)
        object.__setattr__(self, "indptr", indptr)
        object.__setattr__(self, "indices", indices)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]] | np.ndarray) -> "Graph":
        """
        Build a graph from an undirected edge list.

        Raises:
            InvalidGraphError: On loops, duplicate edges or out-of-range ids
        """
        raw = edges if isinstance(edges, np.ndarray) else list(edges)
        arr = np.asarray(raw, dtype=np.int64).reshape(-1, 2)
        if arr.size and (arr.min() < 0 or arr.max() >= n):
            raise InvalidGraphError(f"Edge endpoint outside [0, {n})")
        if np.any(arr[:, 0] == arr[:, 1]):
            raise InvalidGraphError("Self-loops are not allowed")
        lo = np.minimum(arr[:, 0], arr[:, 1])
        hi = np.maximum(arr[:, 0], arr[:, 1])
        keys = lo * n + hi
        if np.unique(keys).size != keys.size:
            raise InvalidGraphError("Duplicate edges are not allowed")
        return cls.from_unique_pairs(n, lo, hi)

    @classmethod
    def from_unique_pairs(cls, n: int, lo: np.ndarray, hi: np.ndarray) -> "Graph":
        """Build CSR arrays from already-deduplicated pairs with lo < hi."""
        lo = np.asarray(lo, dtype=np.int64)
        hi = np.asarray(hi, dtype=np.int64)
        src = np.concatenate([lo, hi])
        dst = np.concatenate([hi, lo])
        order = np.lexsort((dst, src))
        src, dst = src[order], dst[order]
        indptr = np.zeros(n + 1, dtype=np.int64)
        np.cumsum(np.bincount(src, minlength=n), out=indptr[1:])
        return cls(n=n, indptr=indptr, indices=dst)

    @classmethod
    def empty(cls, n: int) -> "Graph":
        """Edgeless graph on n vertices."""
        return cls(n=n, indptr=np.zeros(n + 1, dtype=np.int64), indices=np.zeros(0, dtype=np.int64))

    @property
    def edge_count(self) -> int:
        """Number of undirected edges."""
        return int(self.indices.size // 2)

    def adjacency(self, u: int) -> np.ndarray:
        """Sorted neighbor ids of u."""
        self.check_vertex(u)
        return self.indices[self.indptr[u] : self.indptr[u + 1]]

    def degree(self, u: int) -> int:
        """Degree of u."""
        self.check_vertex(u)
        return int(self.indptr[u + 1] - self.indptr[u])

    def degrees(self) -> np.ndarray:
        """Degree of every vertex."""
        return np.diff(self.indptr)

    def has_edge(self, u: int, v: int) -> bool:
        """Check whether {u, v} is an edge."""
        nbrs = self.adjacency(u)
        pos = int(np.searchsorted(nbrs, v))
        return pos < nbrs.size and int(nbrs[pos]) == v

    def is_regular(self, d: int) -> bool:
        """Check whether every vertex has degree exactly d."""
        return bool(np.all(self.degrees() == d))

    def is_independent(self, vertices: Iterable[int] | np.ndarray) -> bool:
        """Check that no edge joins two of the given vertices."""
        ids = vertices if isinstance(vertices, np.ndarray) else list(vertices)
        mask = np.zeros(self.n, dtype=bool)
        mask[np.asarray(ids, dtype=np.int64)] = True
        src, dst = self.directed_edges
        return not bool(np.any(mask[src] & mask[dst]))

    def edges(self) -> np.ndarray:
        """Undirected edges as an (m, 2) array with u < v, sorted lexicographically."""
        src, dst = self.directed_edges
        keep = src < dst
        return np.stack([src[keep], dst[keep]], axis=1)

    def check_vertex(self, u: int) -> None:
        """
        Validate a vertex id.

        Raises:
            InvalidVertexError: If u is not in [0, n)
        """
        if not 0 <= u < self.n:
            raise InvalidVertexError(f"Vertex {u} is not in [0, {self.n})")

    @cached_property
    def directed_edges(self) -> tuple[np.ndarray, np.ndarray]:
        """Both orientations of every edge as (src, dst) arrays, CSR order."""
        src = np.repeat(np.arange(self.n, dtype=np.int64), self.degrees())
        dst = self.indices
        src.setflags(write=False)
        return src, dst

    @cached_property
    def source_incidence(self) -> sp.csr_matrix:
        """Sparse (2m x n) matrix mapping each directed edge to its source vertex."""
        src, _ = self.directed_edges
        data = np.ones(src.size, dtype=np.float64)
        return sp.csr_matrix((data, (np.arange(src.size), src)), shape=(src.size, self.n))

    def relabeled(self, permutation: np.ndarray) -> "Graph":
        """Graph with vertex u renamed to permutation[u]."""
        perm = np.asarray(permutation, dtype=np.int64)
        if perm.shape != (self.n,) or not np.array_equal(np.sort(perm), np.arange(self.n)):
            raise InvalidGraphError("Relabeling must be a permutation of 0..n-1")
        e = self.edges()
        if e.size == 0:
            return Graph.empty(self.n)
        a, b = perm[e[:, 0]], perm[e[:, 1]]
        return Graph.from_unique_pairs(self.n, np.minimum(a, b), np.maximum(a, b))

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return (
            self.n == other.n
            and np.array_equal(self.indptr, other.indptr)
            and np.array_equal(self.indices, other.indices)
        )

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        """Debug representation."""
        return f"Graph(n={self.n}, edge_count={self.edge_count})"
