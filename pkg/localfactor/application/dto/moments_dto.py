"""Moment, rate and window DTOs."""

from dataclasses import dataclass
from typing import Optional

from localfactor.domain.value_objects.overlap_query import GraphModel, LogExpectation
from localfactor.domain.value_objects.rate_point import RatePoint, Window


@dataclass
class MomentTableDTO:
    model: GraphModel
    rows: list[LogExpectation]


@dataclass
class RateScanDTO:
    model: GraphModel
    d: float
    beta: float
    zhat: list[float]
    points: list[RatePoint]


@dataclass
class MinDDTO:
    beta: float
    zhat_target: float
    model: GraphModel
    d: int
    window: Window
    schedule: list[tuple[int, Optional[float]]]
    nonmonotone: list[int]
    saturated: bool = False


# --- Request ---

@dataclass
class MomentRequest:
    model: GraphModel
    n: int
    d: float
    m: int
    # None evaluates every k in [max(0, 2m - n), m]
    k: Optional[int] = None
    # Regular model only; None sums over l
    l: Optional[int] = None  # noqa: E741


@dataclass
class RateScanRequest:
    model: GraphModel
    d: float
    beta: float
    zhat: list[float]


@dataclass
class WindowRequest:
    model: GraphModel
    d: int
    beta: float


@dataclass
class MinDRequest:
    model: GraphModel
    beta: float
    zhat_target: float
    # False keeps searching past windows that end at the grid edge
    accept_saturated: bool = True
