"""Random stream port for reproducible Monte Carlo."""

from abc import ABC, abstractmethod
from enum import IntEnum

import numpy as np


class StreamPurpose(IntEnum):
    """Key component separating the streams of different experiments."""

    GRAPH = 1
    LABELS = 2
    TREE = 3
    COUPLING = 4
    LOCALITY = 5


class RandomStreamPort(ABC):
    """Port interface for keyed, independent random streams."""

    @abstractmethod
    def stream(self, seed: int, *key: int) -> np.random.Generator:
        """Generator determined only by (seed, *key)."""
        ...
