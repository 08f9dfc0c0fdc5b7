"""Asymptotic rate functions of the overlap first moment (0 log 0 = 0 throughout)."""

import math

import numpy as np
from scipy.optimize import minimize_scalar
from scipy.special import xlogy

from localfactor.domain.errors.domain_errors import RateDomainError
from localfactor.domain.value_objects.rate_point import RatePoint

Y_GRID_POINTS = 1001


def _ent(v: np.ndarray | float) -> np.ndarray:
    """v log v with 0 log 0 = 0."""
    return xlogy(v, v)


def _validate_sx(s: float, x: float) -> None:
    if not 0.0 < x <= s:
        raise RateDomainError(f"need 0 < x <= s, got s={s}, x={x}")
    if 1.0 - 2.0 * s + x <= 0.0:
        raise RateDomainError(f"need 1 - 2s + x > 0, got s={s}, x={x}")


def asymptotic_quadratic(beta: float, zhat: float | np.ndarray) -> float | np.ndarray:
    """
    2(1+beta) - (1+beta)^2 - (1+zhat) + (1+zhat)^2/2.

    Negative iff |zhat| < sqrt(2 beta^2 - 1).
    """
    return 2.0 * (1.0 + beta) - (1.0 + beta) ** 2 - (1.0 + zhat) + (1.0 + zhat) ** 2 / 2.0


def rate_er_values(s: float, x: np.ndarray, d: float) -> np.ndarray:
    """Vectorized rate_er; -inf where no pair of sets with these densities exists."""
    x = np.asarray(x, dtype=np.float64)
    a = s - x
    t = 1.0 - 2.0 * s + x
    feasible = (x > 0) & (a >= 0) & (t > 0)
    xf = np.where(feasible, x, 0.5)
    af = np.where(feasible, a, 0.0)
    tf = np.where(feasible, t, 1.0)
    value = -_ent(xf) - 2.0 * _ent(af) - _ent(tf) - d * ((2.0 * s - xf) ** 2 / 2.0 - af**2)
    return np.where(feasible, value, -np.inf)


def rate_er(s: float, x: float, d: float) -> RatePoint:
    """
    Erdős–Rényi rate: entropy of the set pair minus d((2s-x)^2/2 - (s-x)^2).

    Raises:
        RateDomainError: If 0 < x <= s or 1 - 2s + x > 0 fails
    """
    _validate_sx(s, x)
    value = float(rate_er_values(s, np.array([x]), d)[0])
    return RatePoint(d=d, s=s, x=x, value=value)


def _base_reg(s: np.ndarray | float, x: np.ndarray | float, d: float) -> np.ndarray:
    """y-independent part of the regular rate."""
    a = s - x
    t = 1.0 - 2.0 * s + x
    return -_ent(x) - 2.0 * _ent(a) - _ent(t) + 2.0 * d * _ent(a) + d * _ent(t)


def y_part(
    s: float, x: np.ndarray | float, y: np.ndarray | float, d: float
) -> np.ndarray:
    """-d y log y - 2d(s-x-y) log(s-x-y) - (d/2)(1-4s+2x+2y) log(1-4s+2x+2y)."""
    a = s - x
    u = 1.0 - 4.0 * s + 2.0 * x + 2.0 * np.asarray(y)
    return -d * _ent(y) - 2.0 * d * _ent(a - np.asarray(y)) - 0.5 * d * _ent(u)


def y_part_approx(s: float, x: float, y: np.ndarray | float, d: float) -> np.ndarray:
    """Small-y form d y + 2d y log(s-x) - d y log y, maximized at y = (s-x)^2."""
    if s <= x:
        raise RateDomainError(f"need x < s, got s={s}, x={x}")
    y = np.asarray(y, dtype=np.float64)
    return d * y + 2.0 * d * y * math.log(s - x) - d * _ent(y)


def stationary_y(s: np.ndarray | float, x: np.ndarray | float) -> np.ndarray:
    """
    Maximizer of y_part: the positive root of y^2 + (1-2s) y - (s-x)^2 = 0.

    y_part is concave in y, so the root is its global maximum on the feasible
    interval.
    """
    a = np.asarray(s, dtype=np.float64) - np.asarray(x, dtype=np.float64)
    b = 1.0 - 2.0 * np.asarray(s, dtype=np.float64)
    root = np.sqrt(b**2 + 4.0 * a**2)
    with np.errstate(divide="ignore", invalid="ignore"):
        stable = np.where(b >= 0, 2.0 * a**2 / (b + root), (root - b) / 2.0)
    return np.where(a > 0, stable, 0.0)


def feasible_y_interval(s: float, x: float) -> tuple[float, float]:
    """
    [max(0, -(1-4s+2x)/2), s - x].

    Raises:
        RateDomainError: If the interval is empty
    """
    lo = max(0.0, -(1.0 - 4.0 * s + 2.0 * x) / 2.0)
    hi = s - x
    if lo > hi:
        raise RateDomainError(f"no feasible y for s={s}, x={x}")
    return lo, hi


def rate_reg(s: float, x: float, y: float, d: float) -> RatePoint:
    """
    Configuration-model rate at cross-edge density y.

    Raises:
        RateDomainError: If (s, x, y) is outside the domain
    """
    _validate_sx(s, x)
    lo, hi = feasible_y_interval(s, x)
    if not lo <= y <= hi:
        raise RateDomainError(f"y={y} outside the feasible interval [{lo}, {hi}]")
    value = float(_base_reg(s, x, d) + y_part(s, x, y, d))
    return RatePoint(d=d, s=s, x=x, y=y, value=value)


def max_rate_reg_over_y(s: float, x: float, d: float, rtol: float = 1e-6) -> RatePoint:
    """
    Global maximum of rate_reg over feasible y.

    Candidates: (s-x)^2 when feasible, the stationary root, both interval ends
    and a bounded Brent refinement; the best one wins.
    """
    _validate_sx(s, x)
    lo, hi = feasible_y_interval(s, x)

    def value(y: float) -> float:
        return float(y_part(s, x, y, d))

    y_star = float(np.clip(stationary_y(s, x), lo, hi))
    candidates = [lo, hi, y_star]
    if lo <= (s - x) ** 2 <= hi:
        candidates.append((s - x) ** 2)
    if hi > lo:
        refined = minimize_scalar(
            lambda y: -value(y),
            bounds=(lo, hi),
            method="bounded",
            options={"xatol": rtol * max(y_star, 1e-300)},
        )
        candidates.append(float(refined.x))
    best = max(candidates, key=value)
    return RatePoint(d=d, s=s, x=x, y=best, value=float(_base_reg(s, x, d)) + value(best))


def max_rate_reg_values(s: float, x: np.ndarray, d: float) -> tuple[np.ndarray, np.ndarray]:
    """
    Vectorized max over y via the stationary root; (-inf, nan) where infeasible.

    A point is infeasible when the (s, x) pair is out of range or its feasible
    y interval is empty, which happens exactly when s > 1/2.
    """
    x = np.asarray(x, dtype=np.float64)
    a = s - x
    t = 1.0 - 2.0 * s + x
    lo = np.maximum(0.0, 2.0 * s - x - 0.5)
    feasible = (x > 0) & (a >= 0) & (t > 0) & (lo <= a)
    xf = np.where(feasible, x, s)
    y = np.clip(stationary_y(s, xf), np.where(feasible, lo, 0.0), np.where(feasible, a, 0.0))
    with np.errstate(invalid="ignore"):
        value = _base_reg(s, xf, d) + y_part(s, xf, y, d)
    return np.where(feasible, value, -np.inf), np.where(feasible, y, np.nan)


def argmax_y_part_approx(s: float, x: float, d: float, rtol: float = 1e-6) -> float:
    """Grid search over [0, s-x] refined by bounded Brent on the small-y form."""
    a = s - x
    if a <= 0:
        return 0.0
    grid = np.linspace(0.0, a, Y_GRID_POINTS)
    values = y_part_approx(s, x, grid, d)
    i = int(np.argmax(values))
    lo = grid[max(i - 1, 0)]
    hi = grid[min(i + 1, grid.size - 1)]
    refined = minimize_scalar(
        lambda y: -float(y_part_approx(s, x, y, d)),
        bounds=(lo, hi),
        method="bounded",
        options={"xatol": rtol * a**2},
    )
    return float(refined.x)
