"""Unit tests for the structured experiment logger and the system clock."""

import json
import logging
from pathlib import Path

from localfactor.infrastructure.clock.system_clock import SystemClock
from localfactor.infrastructure.observability.experiment_logger import StructuredExperimentLogger


class TestStructuredExperimentLogger:
    """Test cases for StructuredExperimentLogger."""

    def test_event_is_one_json_object(self, fake_clock, caplog):
        """Test each event becomes a JSON line with timestamp, type, run id and details."""
        log = StructuredExperimentLogger(fake_clock, run_id="run-1")

        with caplog.at_level(logging.INFO, logger="experiment"):
            log.log_event("density.estimated", {"d": 3, "alpha_hat": 0.25})

        [record] = [r for r in caplog.records if r.name == "experiment"]
        entry = json.loads(record.getMessage())
        assert entry == {
            "timestamp": "2024-01-01T12:00:00+00:00",
            "event_type": "density.estimated",
            "run_id": "run-1",
            "details": {"d": 3, "alpha_hat": 0.25},
        }

    def test_timestamp_follows_clock(self, fake_clock, caplog):
        """Test the timestamp comes from the injected clock."""
        log = StructuredExperimentLogger(fake_clock, run_id="run-1")
        fake_clock.advance(minutes=5)

        with caplog.at_level(logging.INFO, logger="experiment"):
            log.log_event("window.solved", {})

        entry = json.loads(caplog.records[-1].getMessage())
        assert entry["timestamp"] == "2024-01-01T12:05:00+00:00"

    def test_unserializable_details_fall_back_to_str(self, fake_clock, caplog):
        """Test values json cannot encode are written as strings."""
        log = StructuredExperimentLogger(fake_clock)

        with caplog.at_level(logging.INFO, logger="experiment"):
            log.log_event("graph.generated", {"path": Path("results") / "graph.txt"})

        entry = json.loads(caplog.records[-1].getMessage())
        assert entry["details"]["path"] == str(Path("results") / "graph.txt")
        assert len(entry["run_id"]) == 32


class TestSystemClock:
    """Test cases for SystemClock."""

    def test_now_is_utc(self):
        """Test now() is timezone aware."""
        assert SystemClock().now().utcoffset().total_seconds() == 0

    def test_monotonic_advances(self):
        """Test the monotonic reading never goes back."""
        clock = SystemClock()
        first = clock.monotonic()

        assert clock.monotonic() >= first
