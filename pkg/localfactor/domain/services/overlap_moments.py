"""Exact first moments of overlapping independent-set pairs, in log domain."""

import math

import numpy as np
from scipy.special import gammaln, logsumexp

from localfactor.domain.policies.overlap_constraint_policy import OverlapConstraintPolicy
from localfactor.domain.value_objects.overlap_query import GraphModel, LogExpectation, OverlapQuery

LOG2 = math.log(2.0)


def log_factorial(n: float) -> float:
    """log n! via log-gamma."""
    return float(gammaln(n + 1.0))


def log_binomial(n: float, k: float) -> float:
    """log C(n, k); -inf outside 0 <= k <= n."""
    if k < 0 or k > n:
        return -math.inf
    return log_factorial(n) - log_factorial(k) - log_factorial(n - k)


def log_pair_count(q: OverlapQuery) -> float:
    """log of n! / (k! (m-k)! (m-k)! (n-2m+k)!): ordered set pairs with overlap k."""
    return (
        log_factorial(q.n)
        - log_factorial(q.k)
        - 2.0 * log_factorial(q.private)
        - log_factorial(q.n - q.union)
    )


def log_expected_overlap_er(q: OverlapQuery) -> LogExpectation:
    """
    log E|Overlap(n, d, m, k)| in G(n, d/n).

    Both sets are independent iff none of the C(2m-k, 2) - (m-k)^2 pairs
    inside I or inside J is an edge.
    """
    OverlapConstraintPolicy.validate_er(q)
    forbidden = q.union * (q.union - 1) // 2 - q.private**2
    log_value = log_pair_count(q) + forbidden * math.log1p(-q.d / q.n)
    return LogExpectation(log_value=log_value, query=q, model=GraphModel.ER)


def _log_matchings(size: int) -> float:
    """log of the number of perfect matchings on `size` points (size even)."""
    half = size // 2
    return log_factorial(size) - log_factorial(half) - half * LOG2


def log_expected_overlap_reg(q: OverlapQuery) -> LogExpectation:
    """
    log E|A(m, k, l)| in the configuration model.

    Counts matchings where l replica pairs join I minus J to J minus I, every
    other replica of I union J goes outside, and the rest match freely; divided
    by the number of perfect matchings on nd replicas.

    Raises:
        OverlapConstraintError: parity, l-range, nonnegativity or size violations
    """
    OverlapConstraintPolicy.validate_reg(q)
    d = int(q.d)
    l = q.l or 0  # noqa: E741
    total = q.n * d
    inside = q.union * d
    leaving = inside - 2 * l
    rest = total - 2 * inside + 2 * l

    log_value = (
        log_pair_count(q)
        + 2.0 * log_binomial(q.private * d, l)
        + log_factorial(l)
        + log_binomial(total - inside, leaving)
        + log_factorial(leaving)
        + _log_matchings(rest)
        - _log_matchings(total)
    )
    return LogExpectation(log_value=log_value, query=q, model=GraphModel.REG)


def log_expected_overlap_reg_total(n: int, d: int, m: int, k: int) -> LogExpectation:
    """log E|Overlap_d(n, m, k)|: log-sum-exp of the l terms over every feasible l."""
    base = OverlapQuery(n=n, d=d, m=m, k=k)
    OverlapConstraintPolicy.validate_reg_model(base)
    terms = [
        log_expected_overlap_reg(base.with_l(l)).log_value
        for l in OverlapConstraintPolicy.feasible_l_range(base)  # noqa: E741
    ]
    log_value = float(logsumexp(np.asarray(terms))) if terms else -math.inf
    return LogExpectation(
        log_value=log_value, query=OverlapQuery(n=n, d=d, m=m, k=k), model=GraphModel.REG
    )
