"""Trial executor port."""

from abc import ABC, abstractmethod
from collections.abc import Callable, Sequence
from typing import TypeVar

T = TypeVar("T")
R = TypeVar("R")


class TrialExecutorPort(ABC):
    """Port interface for running independent trials."""

    @abstractmethod
    def map(self, fn: Callable[[T], R], items: Sequence[T]) -> list[R]:
        """Apply fn to every item; results keep the order of items."""
        ...
