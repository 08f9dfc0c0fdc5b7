"""Unit tests for the trial executors."""

import threading

import pytest

from localfactor.infrastructure.parallel.trial_executors import (
    SerialTrialExecutor,
    ThreadPoolTrialExecutor,
)


class TestTrialExecutors:
    """Test cases for SerialTrialExecutor and ThreadPoolTrialExecutor."""

    @pytest.mark.parametrize(
        "executor", [SerialTrialExecutor(), ThreadPoolTrialExecutor(1), ThreadPoolTrialExecutor(4)]
    )
    def test_preserves_order(self, executor):
        """Test results come back in item order."""
        assert executor.map(lambda i: i * i, list(range(50))) == [i * i for i in range(50)]

    def test_uses_worker_threads(self):
        """Test more than one item runs off the calling thread."""
        caller = threading.get_ident()
        idents = ThreadPoolTrialExecutor(2).map(lambda _: threading.get_ident(), [0, 1, 2, 3])

        assert all(ident != caller for ident in idents)

    def test_empty_items(self):
        """Test an empty batch gives an empty list."""
        assert ThreadPoolTrialExecutor(4).map(lambda i: i, []) == []

    def test_rejects_zero_threads(self):
        """Test threads < 1 raises ValueError."""
        with pytest.raises(ValueError):
            ThreadPoolTrialExecutor(0)
