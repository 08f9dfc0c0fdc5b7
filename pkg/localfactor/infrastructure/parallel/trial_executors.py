"""Trial executors."""

from collections.abc import Callable, Sequence
from concurrent.futures import ThreadPoolExecutor
from typing import TypeVar

from localfactor.application.ports.trial_executor_port import TrialExecutorPort

T = TypeVar("T")
R = TypeVar("R")


class SerialTrialExecutor(TrialExecutorPort):
    """Runs every item in the calling thread."""

    def map(self, fn: Callable[[T], R], items: Sequence[T]) -> list[R]:
        return [fn(item) for item in items]


class ThreadPoolTrialExecutor(TrialExecutorPort):
    """Runs items on up to `threads` workers; results come back in item order."""

    def __init__(self, threads: int) -> None:
        if threads < 1:
            raise ValueError(f"threads must be at least 1, got {threads}")
        self.threads = threads

    def map(self, fn: Callable[[T], R], items: Sequence[T]) -> list[R]:
        if self.threads == 1 or len(items) <= 1:
            return [fn(item) for item in items]
        with ThreadPoolExecutor(max_workers=min(self.threads, len(items))) as pool:
            return list(pool.map(fn, items))
