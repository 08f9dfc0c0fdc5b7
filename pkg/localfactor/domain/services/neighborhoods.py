"""Rooted balls and tree-likeness tests."""

from typing import Optional

import numpy as np

from localfactor.domain.entities.canonical_tree import canonical_vertex_count
from localfactor.domain.entities.graph import Graph
from localfactor.domain.entities.neighborhood_view import NeighborhoodView


def neighborhood(
    g: Graph, u: int, r: int, labels: Optional[np.ndarray] = None
) -> NeighborhoodView:
    """
    Breadth-first ball B(u, r) with its induced edges.

    Vertices are listed by (distance, id). When `labels` covers the whole
    graph, the view carries the labels of its vertices.
    """
    g.check_vertex(u)
    if r < 0:
        raise ValueError(f"Radius cannot be negative, got {r}")

    dist = {u: 0}
    frontier = [u]
    for depth in range(1, r + 1):
        nxt = []
        for v in frontier:
            for w in g.indices[g.indptr[v] : g.indptr[v + 1]].tolist():
                if w not in dist:
                    dist[w] = depth
                    nxt.append(w)
        if not nxt:
            break
        frontier = nxt

    order = sorted(dist, key=lambda v: (dist[v], v))
    vertices = np.asarray(order, dtype=np.int64)
    distances = np.asarray([dist[v] for v in order], dtype=np.int64)

    edges = []
    for v in order:
        for w in g.indices[g.indptr[v] : g.indptr[v + 1]].tolist():
            if v < w and w in dist:
                edges.append((v, w))
    induced = np.asarray(sorted(edges), dtype=np.int64).reshape(-1, 2)

    view_labels = None if labels is None else np.asarray(labels)[vertices]
    return NeighborhoodView(
        root=u,
        radius=r,
        vertices=vertices,
        distances=distances,
        induced_edges=induced,
        labels=view_labels,
    )


def is_canonical_tree(view: NeighborhoodView, d: int) -> bool:
    """
    Structural isomorphism test against T_{d,r} rooted at the view's root.

    Acyclic, every vertex closer than r has degree d, every vertex at
    distance r is a leaf.
    """
    if view.induced_edges.shape[0] != view.size - 1:
        return False
    if view.radius == 0:
        return True
    position = {int(v): i for i, v in enumerate(view.vertices)}
    degree = np.zeros(view.size, dtype=np.int64)
    for a, b in view.induced_edges:
        degree[position[int(a)]] += 1
        degree[position[int(b)]] += 1
    inner = view.distances < view.radius
    outer = view.distances == view.radius
    if np.any(degree[inner] != d) or np.any(degree[outer] != 1):
        return False
    # Leaves must actually reach depth r.
    return bool(outer.any())


def ball_is_canonical_tree(g: Graph, u: int, r: int, d: int) -> bool:
    """
    Same answer as is_canonical_tree(neighborhood(g, u, r), d) without
    materializing the view; stops at the first cycle or degree mismatch.
    """
    if r == 0:
        return True
    indptr, indices = g.indptr, g.indices
    parent = {u: -1}
    frontier = [u]
    for depth in range(r + 1):
        if not frontier:
            return False
        nxt = []
        for v in frontier:
            nbrs = indices[indptr[v] : indptr[v + 1]]
            if depth < r and nbrs.size != d:
                return False
            for w in nbrs.tolist():
                if w == parent[v]:
                    continue
                if w in parent:
                    return False
                if depth < r:
                    parent[w] = v
                    nxt.append(w)
        frontier = nxt
    return True


def tree_like_count(g: Graph, d: int, r: int) -> int:
    """Number of vertices whose radius-r ball is isomorphic to T_{d,r}."""
    if r > 0 and canonical_vertex_count(d, r) > g.n:
        return 0
    return sum(1 for u in range(g.n) if ball_is_canonical_tree(g, u, r, d))


def tree_fraction(g: Graph, d: int, r: int) -> float:
    """Fraction of vertices whose radius-r ball is isomorphic to T_{d,r}."""
    if g.n == 0:
        return 0.0
    return tree_like_count(g, d, r) / g.n


def non_tree_count(g: Graph, d: int, r: int) -> int:
    """Number of vertices whose radius-r ball is not T_{d,r}."""
    return g.n - tree_like_count(g, d, r)
