"""Edge-list text format: a header line, then sorted `u v` lines with u < v."""

from pathlib import Path

import numpy as np

from localfactor.domain.entities.graph import Graph
from localfactor.domain.errors.domain_errors import EdgeListFormatError
from localfactor.domain.value_objects.edge_list_header import EdgeListHeader


def write_edge_list(path: Path, graph: Graph, header: EdgeListHeader) -> None:
    """Write the header and every edge in lexicographic order."""
    if header.n != graph.n:
        raise EdgeListFormatError(f"header n={header.n} does not match graph n={graph.n}")
    edges = graph.edges()
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        f.write(header.format() + "\n")
        for u, v in edges:
            f.write(f"{u} {v}\n")


def read_edge_list(path: Path) -> tuple[Graph, EdgeListHeader]:
    """
    Parse an edge-list file.

    Raises:
        EdgeListFormatError: On a bad header, a malformed line, u >= v, an id
            outside [0, n), or a line not strictly after its predecessor
    """
    with open(path, encoding="utf-8") as f:
        first = f.readline()
        if not first:
            raise EdgeListFormatError("line 1: missing header")
        header = EdgeListHeader.parse(first)

        us: list[int] = []
        vs: list[int] = []
        previous: tuple[int, int] | None = None
        for number, line in enumerate(f, start=2):
            if not line.endswith("\n"):
                raise EdgeListFormatError(f"line {number}: missing trailing newline")
            parts = line.split()
            if len(parts) != 2 or not all(p.isdigit() for p in parts):
                raise EdgeListFormatError(
                    f"line {number}: expected '<u> <v>', got {line.rstrip()!r}"
                )
            u, v = int(parts[0]), int(parts[1])
            if u >= v:
                raise EdgeListFormatError(f"line {number}: need u < v, got {u} {v}")
            if v >= header.n:
                raise EdgeListFormatError(f"line {number}: vertex {v} outside [0, {header.n})")
            if previous is not None and (u, v) <= previous:
                kind = "duplicate" if (u, v) == previous else "unsorted"
                raise EdgeListFormatError(f"line {number}: {kind} edge {u} {v}")
            previous = (u, v)
            us.append(u)
            vs.append(v)

    graph = Graph.from_unique_pairs(
        header.n, np.asarray(us, dtype=np.int64), np.asarray(vs, dtype=np.int64)
    )
    return graph, header
