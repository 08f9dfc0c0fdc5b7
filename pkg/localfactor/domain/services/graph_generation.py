"""Random graph samplers: configuration model and sparse Erdős–Rényi."""

import math

import numpy as np

from localfactor.domain.entities.graph import Graph
from localfactor.domain.entities.regular_sample import RegularSample
from localfactor.domain.errors.domain_errors import InvalidDegreeError, ParityError


class ConfigurationModelSampler:
    """
    Random d-regular multigraphs from a uniform matching of replicas.

    Vertex u owns replicas u*d .. u*d + d - 1. A uniform permutation of all
    nd replicas paired consecutively is a uniform perfect matching.
    """

    @staticmethod
    def validate(n: int, d: int) -> None:
        """
        Validate configuration-model parameters.

        Raises:
            InvalidDegreeError: If n < 1 or d < 1
            ParityError: If n*d is odd
        """
        if n < 1:
            raise InvalidDegreeError(f"Vertex count must be at least 1, got {n}")
        if d < 1:
            raise InvalidDegreeError(f"Degree must be at least 1, got {d}")
        if (n * d) % 2 != 0:
            raise ParityError(f"n*d must be even (n={n}, d={d})")

    @classmethod
    def sample(cls, n: int, d: int, rng: np.random.Generator) -> RegularSample:
        """Draw one configuration-model matching and project it to a simple graph."""
        cls.validate(n, d)
        matching = rng.permutation(n * d).reshape(-1, 2)
        owners = matching // d

        loops = owners[:, 0] == owners[:, 1]
        lo = np.minimum(owners[~loops, 0], owners[~loops, 1])
        hi = np.maximum(owners[~loops, 0], owners[~loops, 1])
        keys = np.unique(lo * n + hi)
        graph = Graph.from_unique_pairs(n, keys // n, keys % n)

        return RegularSample(
            graph=graph,
            n=n,
            d=d,
            matching=matching,
            loop_count=int(loops.sum()),
            multi_edge_count=int(lo.size - keys.size),
        )


class ErdosRenyiSampler:
    """G(n, d/n) by geometric skipping over the C(n, 2) edge slots."""

    @staticmethod
    def validate(n: int, d: float) -> None:
        """
        Validate Erdős–Rényi parameters.

        Raises:
            InvalidDegreeError: If n < 1 or d outside [0, n]
        """
        if n < 1:
            raise InvalidDegreeError(f"Vertex count must be at least 1, got {n}")
        if not 0 <= d <= n:
            raise InvalidDegreeError(f"Average degree must lie in [0, n], got d={d}, n={n}")

    @classmethod
    def sample(cls, n: int, d: float, rng: np.random.Generator) -> Graph:
        """Draw one G(n, d/n) graph."""
        cls.validate(n, d)
        slots = n * (n - 1) // 2
        p = d / n
        if slots == 0 or p == 0:
            return Graph.empty(n)
        if p >= 1:
            chosen = np.arange(slots, dtype=np.int64)
        else:
            chosen = cls._skip_slots(slots, p, rng)
        lo, hi = cls._slot_to_pair(chosen, n)
        return Graph.from_unique_pairs(n, lo, hi)

    @staticmethod
    def _skip_slots(slots: int, p: float, rng: np.random.Generator) -> np.ndarray:
        """Indices of present slots; gaps between successes are geometric."""
        mean = slots * p
        batch = int(mean + 5 * math.sqrt(mean) + 16)
        positions: list[np.ndarray] = []
        last = -1
        while True:
            gaps = rng.geometric(p, size=batch).astype(np.int64)
            run = last + np.cumsum(gaps)
            inside = run[run < slots]
            positions.append(inside)
            if inside.size < run.size:
                break
            last = int(run[-1])
        return np.concatenate(positions)

    @staticmethod
    def _slot_to_pair(slot: np.ndarray, n: int) -> tuple[np.ndarray, np.ndarray]:
        """
        Invert the row-major numbering of pairs u < v.

        Row u starts at slot u*(2n - u - 1)/2.
        """
        b = 2 * n - 1
        u = np.floor((b - np.sqrt(float(b) ** 2 - 8.0 * slot)) / 2).astype(np.int64)
        u = np.clip(u, 0, n - 2)

        def start(row: np.ndarray) -> np.ndarray:
            return row * (2 * n - row - 1) // 2

        # Float rounding can land one row off in either direction.
        u = np.where(start(u) > slot, u - 1, u)
        u = np.where(start(u + 1) <= slot, u + 1, u)
        v = slot - start(u) + u + 1
        return u, v
