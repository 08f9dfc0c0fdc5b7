"""Vertex decorations (i.i.d. labels) value objects."""

from dataclasses import dataclass

import numpy as np

from localfactor.domain.errors.domain_errors import InvalidProbabilityError


@dataclass(frozen=True, eq=False)
class Decoration:
    """Per-vertex labels in [0, 1]."""

    labels: np.ndarray

    def __post_init__(self) -> None:
        """Validate labels."""
        labels = np.asarray(self.labels, dtype=np.float64)
        if labels.ndim != 1:
            raise ValueError("Labels must be a flat sequence")
        if labels.size and (labels.min() < 0.0 or labels.max() > 1.0):
            raise ValueError("Labels must lie in [0, 1]")
        labels.setflags(write=False)
        object.__setattr__(self, "labels", labels)

    @classmethod
    def sample(cls, n: int, rng: np.random.Generator) -> "Decoration":
        """i.i.d. uniform labels."""
        return cls(labels=rng.random(n))

    @property
    def n(self) -> int:
        """Number of labelled vertices."""
        return int(self.labels.size)


@dataclass(frozen=True, eq=False)
class CoupledDecoration:
    """
    A p-correlated pair of decorations.

    With independent uniforms x, w, z: y(u) = x(u) where w(u) < p, else z(u).
    `reuse_mask` records which coordinates were copied.
    """

    x: Decoration
    y: Decoration
    p: float
    reuse_mask: np.ndarray

    def __post_init__(self) -> None:
        """Validate coupling."""
        if not 0.0 <= self.p <= 1.0:
            raise InvalidProbabilityError(f"p must lie in [0, 1], got {self.p}")
        if not (self.x.n == self.y.n == self.reuse_mask.size):
            raise ValueError("Both decorations and the mask must cover the same vertices")
        if np.any(self.y.labels[self.reuse_mask] != self.x.labels[self.reuse_mask]):
            raise ValueError("y must equal x wherever the reuse bit is set")

    @classmethod
    def sample(cls, n: int, p: float, rng: np.random.Generator) -> "CoupledDecoration":
        """
        Draw x, then the thresholds w, then the fresh labels z.

        Raises:
            InvalidProbabilityError: If p is outside [0, 1]
        """
        if not 0.0 <= p <= 1.0:
            raise InvalidProbabilityError(f"p must lie in [0, 1], got {p}")
        x = rng.random(n)
        w = rng.random(n)
        z = rng.random(n)
        mask = w < p
        return cls(
            x=Decoration(x),
            y=Decoration(np.where(mask, x, z)),
            p=p,
            reuse_mask=mask,
        )

    @property
    def n(self) -> int:
        """Number of labelled vertices."""
        return self.x.n
