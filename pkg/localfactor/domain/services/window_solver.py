"""Forbidden overlap window: scans over zhat and the search for the smallest d."""

import logging
import math
from collections.abc import Callable
from dataclasses import dataclass, field

import numpy as np

from localfactor.domain.errors.domain_errors import (
    InvalidDegreeError,
    RateDomainError,
    WindowNotFoundError,
)
from localfactor.domain.services.rate_functions import max_rate_reg_values, rate_er_values
from localfactor.domain.value_objects.overlap_query import GraphModel
from localfactor.domain.value_objects.rate_point import RatePoint, Window

logger = logging.getLogger(__name__)


def set_density(d: float, beta: float) -> float:
    """s = (1 + beta) log d / d."""
    return (1.0 + beta) * math.log(d) / d


def overlap_density(d: float, zhat: np.ndarray | float) -> np.ndarray | float:
    """x = (1 + zhat) log d / d."""
    return (1.0 + zhat) * math.log(d) / d


def theoretical_bound(beta: float, tolerance: float) -> tuple[float, bool]:
    """
    sqrt(2 beta^2 - 1) and whether the window is empty by theory.

    Values of 2 beta^2 - 1 within `tolerance` of zero count as empty.
    """
    gap = 2.0 * beta * beta - 1.0
    if gap <= tolerance:
        return 0.0, True
    return math.sqrt(gap), False


def rate_values(
    d: float, beta: float, model: GraphModel, zhat: np.ndarray
) -> tuple[np.ndarray, np.ndarray]:
    """Rates (and maximizing y for the regular model, nan for er) along a zhat grid."""
    s = set_density(d, beta)
    x = overlap_density(d, np.asarray(zhat, dtype=np.float64))
    if model is GraphModel.ER:
        return rate_er_values(s, x, d), np.full(np.shape(x), np.nan)
    return max_rate_reg_values(s, x, d)


def rate_scan(d: float, beta: float, model: GraphModel, zhat: np.ndarray) -> list[RatePoint]:
    """One RatePoint per grid value; infeasible points carry -inf."""
    s = set_density(d, beta)
    values, ys = rate_values(d, beta, model, zhat)
    xs = overlap_density(d, np.asarray(zhat, dtype=np.float64))
    return [
        RatePoint(
            d=d,
            s=s,
            x=float(x),
            value=float(v),
            y=None if model is GraphModel.ER else float(y),
        )
        for x, v, y in zip(np.atleast_1d(xs), values, ys)
    ]


def _validate(d: int, beta: float) -> None:
    if not 0.0 < beta <= 1.0:
        raise RateDomainError(f"beta must lie in (0, 1], got {beta}")
    if d < 3:
        raise InvalidDegreeError(f"Window scans need d >= 3, got {d}")


def forbidden_window(
    d: int,
    beta: float,
    model: GraphModel,
    grid_points: int = 2001,
    theory_tolerance: float = 1e-6,
) -> Window:
    """
    Largest zhat such that the rate is negative on the whole grid inside [-zhat, zhat].

    Magnitudes run over [0, min(beta, 1)) and are tested at both signs.
    Points where no such pair of sets exists count as negative. A window that
    runs to the last grid magnitude is marked saturated: its edge is the grid
    end, not a sign change of the rate.

    Raises:
        RateDomainError: If a rate on the grid is undefined
    """
    _validate(d, beta)
    bound, empty_by_theory = theoretical_bound(beta, theory_tolerance)
    if empty_by_theory:
        return Window(
            d=d,
            beta=beta,
            model=model,
            zhat_max=None,
            theoretical_bound=bound,
            empty_by_theory=True,
            grid_points=grid_points,
        )

    magnitudes = np.linspace(0.0, min(beta, 1.0), grid_points, endpoint=False)
    plus, _ = rate_values(d, beta, model, magnitudes)
    minus, _ = rate_values(d, beta, model, -magnitudes)
    if np.isnan(plus).any() or np.isnan(minus).any():
        raise RateDomainError(f"undefined rate on the zhat grid at d={d}, beta={beta}")
    negative = (plus < 0) & (minus < 0)
    if not negative[0]:
        zhat_max = None
        saturated = False
    else:
        run = int(np.argmin(negative)) if not negative.all() else negative.size
        zhat_max = float(magnitudes[run - 1])
        saturated = run == negative.size
    return Window(
        d=d,
        beta=beta,
        model=model,
        zhat_max=zhat_max,
        theoretical_bound=bound,
        empty_by_theory=False,
        grid_points=grid_points,
        saturated=saturated,
    )


@dataclass(frozen=True)
class MinDResult:
    """Smallest d opening the window to the target, with the schedule that found it."""

    d: int
    window: Window
    schedule: tuple[tuple[int, float | None], ...]
    nonmonotone: tuple[int, ...] = field(default=())

    @property
    def saturated(self) -> bool:
        """The returned window ends at the grid edge rather than at a sign change."""
        return self.window.saturated


def min_d_for_window(
    beta: float,
    zhat_target: float,
    model: GraphModel,
    window_at: Callable[[int], Window],
    d_start: int = 3,
    d_ceiling: int = 2**40,
    theory_tolerance: float = 1e-6,
    on_nonmonotone: Callable[[int, int], None] | None = None,
    accept_saturated: bool = True,
) -> MinDResult:
    """
    Smallest d on a doubling-then-bisect schedule with zhat_max >= zhat_target.

    `window_at(d)` evaluates the window at degree d. Along the doubling phase a
    window that shrinks from d to 2d is recorded and reported through
    `on_nonmonotone(d, 2d)`. With `accept_saturated=False` a saturated window
    never meets the target, so the search runs past the degrees where no
    finite-d sign change exists yet.

    Raises:
        RateDomainError: If beta <= 1/sqrt(2) or zhat_target is outside (0, bound)
        WindowNotFoundError: If no d up to the ceiling reaches the target
    """
    bound, empty_by_theory = theoretical_bound(beta, theory_tolerance)
    if empty_by_theory:
        raise RateDomainError(f"beta={beta} must exceed 1/sqrt(2)")
    if not 0.0 < zhat_target < bound:
        raise RateDomainError(f"zhat_target must lie in (0, {bound:.6g}), got {zhat_target}")

    def reaches(w: Window) -> bool:
        if w.zhat_max is None or w.zhat_max < zhat_target:
            return False
        return accept_saturated or not w.saturated

    schedule: list[tuple[int, float | None]] = []
    nonmonotone: list[int] = []
    previous: Window | None = None
    last_fail: int | None = None
    d = d_start
    while True:
        if d > d_ceiling:
            raise WindowNotFoundError(
                f"No d <= {d_ceiling} opens the {model.value} window to zhat={zhat_target}"
            )
        window = window_at(d)
        schedule.append((d, window.zhat_max))
        if previous is not None and (previous.zhat_max or 0.0) > (window.zhat_max or 0.0):
            nonmonotone.append(d)
            if on_nonmonotone is not None:
                on_nonmonotone(previous.d, d)
            logger.warning(f"Window shrank from d={previous.d} to d={d}")
        if reaches(window):
            break
        previous, last_fail = window, d
        d *= 2

    found, found_window = d, window
    if last_fail is not None:
        lo, hi = last_fail, d
        while hi - lo > 1:
            mid = (lo + hi) // 2
            mid_window = window_at(mid)
            schedule.append((mid, mid_window.zhat_max))
            if reaches(mid_window):
                hi, found_window = mid, mid_window
            else:
                lo = mid
        found = hi
    if found_window.saturated:
        logger.warning(f"Window at d={found} is saturated at the grid edge zhat={beta}")
    return MinDResult(
        d=found, window=found_window, schedule=tuple(schedule), nonmonotone=tuple(nonmonotone)
    )
