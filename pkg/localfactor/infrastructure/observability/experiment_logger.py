"""Experiment logger implementation."""

import json
import logging
import uuid
from typing import Any, Optional

from localfactor.application.ports.clock_port import ClockPort
from localfactor.application.ports.experiment_log_port import ExperimentLogPort

# Configure experiment logger
experiment_logger = logging.getLogger("experiment")
experiment_logger.setLevel(logging.INFO)


class StructuredExperimentLogger(ExperimentLogPort):
    """Experiment logger that writes structured JSON logs."""

    def __init__(self, clock: ClockPort, run_id: Optional[str] = None) -> None:
        self.logger = experiment_logger
        self.clock = clock
        self.run_id = run_id or uuid.uuid4().hex

    def log_event(self, event_type: str, details: dict[str, Any]) -> None:
        """Log an experiment event as structured JSON."""
        log_entry = {
            "timestamp": self.clock.now().isoformat(),
            "event_type": event_type,
            "run_id": self.run_id,
            "details": details,
        }
        self.logger.info(json.dumps(log_entry, default=str))
