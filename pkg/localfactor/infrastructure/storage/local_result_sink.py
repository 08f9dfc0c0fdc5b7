"""Local result sink implementation."""

import csv
import logging
import threading
from collections.abc import Sequence
from pathlib import Path
from typing import Any

from localfactor.application.errors.app_errors import ReportError
from localfactor.application.ports.result_sink_port import ResultSinkPort
from localfactor.domain.entities.graph import Graph
from localfactor.domain.value_objects.edge_list_header import EdgeListHeader
from localfactor.infrastructure.serialization.edge_list_codec import write_edge_list

logger = logging.getLogger(__name__)


class LocalResultSink(ResultSinkPort):
    """Writes result files into one output directory."""

    def __init__(self, base_path: Path) -> None:
        """
        Initialize local result sink.

        Args:
            base_path: Output directory, created on first write
        """
        self.base_path = Path(base_path)
        self._lock = threading.Lock()

    def write_csv(
        self, name: str, columns: Sequence[str], rows: Sequence[dict[str, Any]]
    ) -> Path:
        path = self._path(name)
        with self._lock:
            try:
                with open(path, "w", encoding="utf-8", newline="") as f:
                    writer = csv.DictWriter(f, fieldnames=list(columns), lineterminator="\n")
                    writer.writeheader()
                    writer.writerows(rows)
            except (OSError, ValueError) as e:
                raise ReportError(f"Failed to write {path}: {e}")
        logger.info(f"Wrote {len(rows)} rows to {path}")
        return path

    def write_json(self, name: str, payload: str) -> Path:
        path = self._path(name)
        with self._lock:
            try:
                path.write_text(payload + "\n", encoding="utf-8")
            except OSError as e:
                raise ReportError(f"Failed to write {path}: {e}")
        return path

    def write_edge_list(self, name: str, graph: Graph, header: EdgeListHeader) -> Path:
        path = self._path(name)
        with self._lock:
            try:
                write_edge_list(path, graph, header)
            except OSError as e:
                raise ReportError(f"Failed to write {path}: {e}")
        logger.info(f"Wrote {graph.edge_count} edges to {path}")
        return path

    def _path(self, name: str) -> Path:
        if Path(name).name != name:
            raise ReportError(f"Result names cannot contain directories: {name!r}")
        try:
            self.base_path.mkdir(parents=True, exist_ok=True)
        except OSError as e:
            raise ReportError(f"Cannot create output directory {self.base_path}: {e}")
        return self.base_path / name
