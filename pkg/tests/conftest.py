"""Test configuration and fixtures."""

from datetime import datetime, timedelta, timezone
from pathlib import Path
from typing import Any

import numpy as np
import pytest

from config.settings import Settings
from localfactor.application.ports.clock_port import ClockPort
from localfactor.application.ports.experiment_log_port import ExperimentLogPort
from localfactor.domain.entities.graph import Graph
from localfactor.infrastructure.parallel.trial_executors import SerialTrialExecutor
from localfactor.infrastructure.random.philox_streams import PhiloxStreamFactory


class FakeClock(ClockPort):
    """Fake clock for deterministic testing."""

    def __init__(self, fixed_time: datetime) -> None:
        self._time = fixed_time
        self._ticks = 0.0

    def now(self) -> datetime:
        """Return fixed time."""
        return self._time

    def monotonic(self) -> float:
        return self._ticks

    def advance(self, **kwargs) -> None:
        """Advance time."""
        step = timedelta(**kwargs)
        self._time += step
        self._ticks += step.total_seconds()


class RecordingExperimentLog(ExperimentLogPort):
    """Keeps every event in memory."""

    def __init__(self) -> None:
        self.events: list[tuple[str, dict[str, Any]]] = []

    def log_event(self, event_type: str, details: dict[str, Any]) -> None:
        self.events.append((event_type, details))

    def of_type(self, event_type: str) -> list[dict[str, Any]]:
        return [details for kind, details in self.events if kind == event_type]


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


@pytest.fixture
def fake_clock() -> FakeClock:
    """Clock fixed at a known instant."""
    return FakeClock(datetime(2024, 1, 1, 12, 0, 0, tzinfo=timezone.utc))


@pytest.fixture
def experiment_log() -> RecordingExperimentLog:
    return RecordingExperimentLog()


@pytest.fixture
def streams() -> PhiloxStreamFactory:
    return PhiloxStreamFactory()


@pytest.fixture
def executor() -> SerialTrialExecutor:
    return SerialTrialExecutor()


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.Generator(np.random.Philox(np.random.SeedSequence(12345)))


@pytest.fixture
def test_settings(tmp_path: Path) -> Settings:
    """Settings writing into a per-test directory, independent of the environment."""
    return Settings(
        _env_file=None,
        threads=1,
        output_dir=tmp_path / "results",
        zhat_grid_points=401,
        default_window_d=1000,
        default_p_grid=[0.0, 0.5, 1.0],
    )
