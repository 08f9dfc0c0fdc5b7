"""Experiment log port."""

from abc import ABC, abstractmethod
from typing import Any


class ExperimentLogPort(ABC):
    """Port interface for structured experiment events."""

    @abstractmethod
    def log_event(self, event_type: str, details: dict[str, Any]) -> None:
        """Record one event."""
        ...
