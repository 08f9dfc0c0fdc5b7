"""Overlap moment query value objects."""

import math
from dataclasses import dataclass
from enum import Enum
from typing import Optional

from localfactor.domain.errors.domain_errors import OverlapConstraintError


class GraphModel(str, Enum):
    """Random graph models with first-moment formulas."""

    ER = "er"
    REG = "reg"


@dataclass(frozen=True)
class OverlapQuery:
    """
    Parameters of E[|Overlap(n, d, m, k)|].

    Two sets of size m meeting in k vertices; l is the number of edges between
    their private parts (regular model only).
    """

    n: int
    d: float
    m: int
    k: int
    l: Optional[int] = None  # noqa: E741

    def __post_init__(self) -> None:
        """Validate size constraints."""
        if min(self.n, self.m, self.k) < 0:
            raise OverlapConstraintError("nonnegativity", "n, m and k must be nonnegative")
        if not self.k <= self.m <= self.n:
            raise OverlapConstraintError(
                "size", f"need 0 <= k <= m <= n (n={self.n}, m={self.m}, k={self.k})"
            )
        if self.union > self.n:
            raise OverlapConstraintError(
                "size", f"2m - k = {self.union} exceeds n = {self.n}"
            )

    @property
    def union(self) -> int:
        """R = 2m - k, the size of I union J."""
        return 2 * self.m - self.k

    @property
    def private(self) -> int:
        """m - k, the size of I minus J."""
        return self.m - self.k

    def with_l(self, l: int) -> "OverlapQuery":  # noqa: E741
        """Same query with a cross-edge count."""
        return OverlapQuery(n=self.n, d=self.d, m=self.m, k=self.k, l=l)


@dataclass(frozen=True)
class LogExpectation:
    """Natural log of an expected count; -inf encodes zero."""

    log_value: float
    query: OverlapQuery
    model: GraphModel

    def __post_init__(self) -> None:
        """Validate value."""
        if math.isnan(self.log_value) or self.log_value == math.inf:
            raise ValueError(f"log value must be finite or -inf, got {self.log_value}")

    @property
    def value(self) -> float:
        """exp(log_value); overflows to inf for huge expectations."""
        return math.exp(self.log_value) if self.log_value < 709.0 else math.inf

    def to_csv_row(self) -> dict[str, object]:
        """Row keyed by `model,n,d,m,k,l,log_value`."""
        return {
            "model": self.model.value,
            "n": self.query.n,
            "d": self.query.d,
            "m": self.query.m,
            "k": self.query.k,
            "l": "" if self.query.l is None else self.query.l,
            "log_value": self.log_value,
        }
