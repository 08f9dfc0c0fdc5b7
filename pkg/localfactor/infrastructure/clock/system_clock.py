"""System clock implementation."""

import time
from datetime import datetime, timezone

from localfactor.application.ports.clock_port import ClockPort


class SystemClock(ClockPort):
    """Real system clock implementation."""

    def now(self) -> datetime:
        """Get current UTC datetime."""
        return datetime.now(timezone.utc)

    def monotonic(self) -> float:
        return time.perf_counter()
