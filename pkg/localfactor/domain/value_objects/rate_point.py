"""Rate function and forbidden window value objects."""

import math
from dataclasses import dataclass
from typing import Optional

from localfactor.domain.value_objects.overlap_query import GraphModel


@dataclass(frozen=True)
class RatePoint:
    """Exponential growth rate of the expected overlap count at (s, x[, y])."""

    d: float
    s: float
    x: float
    value: float
    y: Optional[float] = None

    @property
    def is_negative(self) -> bool:
        """True when the expected count vanishes exponentially."""
        return self.value < 0


@dataclass(frozen=True)
class Window:
    """
    Symmetric range of normalized overlaps zhat with negative rate.

    Overlaps are written x = (1 + zhat) log d / d at set density
    s = (1 + beta) log d / d.
    """

    d: int
    beta: float
    model: GraphModel
    zhat_max: Optional[float]
    theoretical_bound: float
    empty_by_theory: bool
    grid_points: int
    saturated: bool = False

    def __post_init__(self) -> None:
        """Validate window."""
        if self.zhat_max is not None and self.zhat_max < 0:
            raise ValueError("zhat_max cannot be negative")
        if self.empty_by_theory and self.zhat_max is not None:
            raise ValueError("An empty-by-theory window carries no zhat_max")

    @property
    def empty(self) -> bool:
        """No negative stretch around zhat = 0."""
        return self.zhat_max is None

    def forbidden_k_range(self, n: int) -> Optional[tuple[int, int]]:
        """
        Integers k in [(1 - z) n log d / d, (1 + z) n log d / d] for z = zhat_max.

        None when the window is empty or contains no integer.
        """
        if self.zhat_max is None:
            return None
        scale = n * math.log(self.d) / self.d
        lo = math.ceil((1.0 - self.zhat_max) * scale)
        hi = math.floor((1.0 + self.zhat_max) * scale)
        if lo > hi:
            return None
        return lo, hi

    def to_csv_row(self) -> dict[str, object]:
        """Row keyed by `model,d,beta,zhat_max,theoretical_bound`."""
        return {
            "model": self.model.value,
            "d": self.d,
            "beta": self.beta,
            "zhat_max": "" if self.zhat_max is None else self.zhat_max,
            "theoretical_bound": self.theoretical_bound,
        }
