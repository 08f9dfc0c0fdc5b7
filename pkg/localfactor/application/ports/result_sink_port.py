"""Result sink port."""

from abc import ABC, abstractmethod
from collections.abc import Sequence
from pathlib import Path
from typing import Any

from localfactor.domain.entities.graph import Graph
from localfactor.domain.value_objects.edge_list_header import EdgeListHeader


class ResultSinkPort(ABC):
    """Port interface for writing experiment outputs."""

    @abstractmethod
    def write_csv(
        self, name: str, columns: Sequence[str], rows: Sequence[dict[str, Any]]
    ) -> Path:
        """Write rows under a file name; returns the written path."""
        ...

    @abstractmethod
    def write_json(self, name: str, payload: str) -> Path:
        """Write an already-serialized JSON document."""
        ...

    @abstractmethod
    def write_edge_list(self, name: str, graph: Graph, header: EdgeListHeader) -> Path:
        """Write a graph in the edge-list format."""
        ...
