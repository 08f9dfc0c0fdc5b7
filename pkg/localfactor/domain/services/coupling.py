"""p-correlated coupling: overlap of two rule outputs and the search for p."""

import logging
from collections.abc import Callable

import numpy as np

from localfactor.domain.entities.regular_sample import RegularSample
from localfactor.domain.errors.domain_errors import BisectionError, TargetOutOfRangeError
from localfactor.domain.services.local_rules import LocalRule
from localfactor.domain.services.neighborhoods import non_tree_count
from localfactor.domain.services.rule_execution import run_rule
from localfactor.domain.value_objects.decoration import CoupledDecoration
from localfactor.domain.value_objects.estimates import BisectionResult, GammaEstimate
from localfactor.domain.value_objects.run_records import OverlapRecord

logger = logging.getLogger(__name__)


def overlap_trial(
    rule: LocalRule,
    sample: RegularSample,
    coupled: CoupledDecoration,
    trial: int = 0,
    count_non_tree: bool = False,
) -> OverlapRecord:
    """Run the rule on both halves of a coupled decoration over one graph."""
    first = run_rule(rule, sample.graph, coupled.x)
    second = run_rule(rule, sample.graph, coupled.y)
    shared = np.intersect1d(first.members, second.members, assume_unique=True)
    return OverlapRecord(
        trial=trial,
        intersection=int(shared.size),
        size_x=first.size,
        size_y=second.size,
        ties=first.ties + second.ties,
        non_tree=non_tree_count(sample.graph, sample.d, rule.radius) if count_non_tree else None,
        loops=sample.loop_count,
        multi_edges=sample.multi_edge_count,
    )


def bisect_gamma(
    estimate: Callable[[float], GammaEstimate],
    target: float,
    tol: float,
    max_iterations: int,
    on_anomaly: Callable[[float, float, float, float], None] | None = None,
) -> BisectionResult:
    """
    Find p with |gamma_hat(p) - target| <= tol.

    p = 1 and p = 0 are tried first. The bracket keeps the estimates at its
    ends on opposite sides of the target, so continuity guarantees a crossing
    inside it even when gamma_hat is not monotone. An estimate outside the
    current envelope is a non-monotone observation: it is recorded and
    reported through `on_anomaly(p, gamma_hat, low, high)`.

    Raises:
        TargetOutOfRangeError: If target is outside [gamma_hat(0), gamma_hat(1)] +- tol
        BisectionError: If the iteration budget runs out
    """
    high_est = estimate(1.0)
    if abs(high_est.gamma_hat - target) <= tol:
        return BisectionResult(
            p=1.0, gamma_hat=high_est.gamma_hat, std_error=high_est.std_error, iterations=1
        )
    low_est = estimate(0.0)
    if abs(low_est.gamma_hat - target) <= tol:
        return BisectionResult(
            p=0.0, gamma_hat=low_est.gamma_hat, std_error=low_est.std_error, iterations=2
        )

    g_lo, g_hi = low_est.gamma_hat, high_est.gamma_hat
    if not min(g_lo, g_hi) < target < max(g_lo, g_hi):
        raise TargetOutOfRangeError(
            f"target {target} is outside [{min(g_lo, g_hi):.6g}, {max(g_lo, g_hi):.6g}]"
        )
    rising = g_hi > g_lo
    lo, hi = 0.0, 1.0
    anomalies: list[float] = []
    for iteration in range(3, max_iterations + 3):
        mid = 0.5 * (lo + hi)
        est = estimate(mid)
        g = est.gamma_hat
        if abs(g - target) <= tol:
            return BisectionResult(
                p=mid,
                gamma_hat=g,
                std_error=est.std_error,
                iterations=iteration,
                anomalies=tuple(anomalies),
            )
        if not min(g_lo, g_hi) <= g <= max(g_lo, g_hi):
            anomalies.append(mid)
            if on_anomaly is not None:
                on_anomaly(mid, g, g_lo, g_hi)
            logger.warning(f"Non-monotone gamma estimate at p={mid}: {g} outside [{g_lo}, {g_hi}]")
        if (g < target) == rising:
            lo, g_lo = mid, g
        else:
            hi, g_hi = mid, g
    raise BisectionError(
        f"No p within tol={tol} of target {target} after {max_iterations} iterations"
    )
