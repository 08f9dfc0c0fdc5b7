"""Running local rules on decorated graphs."""

import numpy as np

from localfactor.domain.entities.graph import Graph
from localfactor.domain.errors.domain_errors import MissingLabelsError
from localfactor.domain.policies.independence_policy import IndependencePolicy
from localfactor.domain.services.local_rules import LocalRule
from localfactor.domain.services.neighborhoods import neighborhood
from localfactor.domain.value_objects.decoration import Decoration
from localfactor.domain.value_objects.run_records import RuleRun

LOCALITY_BATCH_CELLS = 1_000_000


def _check_cover(g: Graph, x: Decoration) -> None:
    if x.n != g.n:
        raise MissingLabelsError(f"Decoration covers {x.n} vertices, graph has {g.n}")


def evaluate_rule(rule: LocalRule, u: int, g: Graph, x: Decoration) -> int:
    """
    Decision at u computed from B(u, r) and its labels only.

    The ball is evaluated as a standalone graph; ties keep the source ids'
    order.
    """
    _check_cover(g, x)
    view = neighborhood(g, u, rule.radius, labels=x.labels)
    decisions, _ = rule.decide_batch(
        view.local_graph(), view.labels[np.newaxis, :], priority=view.vertices
    )
    return int(decisions[0, 0])


def run_rule(rule: LocalRule, g: Graph, x: Decoration) -> RuleRun:
    """
    I_G(f, x): every accepted vertex, checked for independence.

    Raises:
        MissingLabelsError: If x does not cover g
        IndependenceViolationError: If the rule output contains an edge
    """
    _check_cover(g, x)
    decisions, ties = rule.decide_batch(g, x.labels[np.newaxis, :])
    IndependencePolicy.ensure_independent(g, decisions[0])
    return RuleRun(members=np.flatnonzero(decisions[0]), ties=ties)


def locality_check(
    rule: LocalRule,
    g: Graph,
    u: int,
    x: Decoration,
    trials: int,
    rng: np.random.Generator,
) -> bool:
    """
    Re-randomize every label outside B(u, r) `trials` times.

    Decisions are taken on the full graph, so a rule that reads beyond its
    declared radius is caught.
    """
    _check_cover(g, x)
    baseline, _ = rule.decide_batch(g, x.labels[np.newaxis, :])
    inside = neighborhood(g, u, rule.radius).vertices
    outside = np.setdiff1d(np.arange(g.n), inside)
    if outside.size == 0:
        return True

    chunk = max(1, LOCALITY_BATCH_CELLS // max(g.n, 1))
    done = 0
    while done < trials:
        rows = min(chunk, trials - done)
        batch = np.tile(x.labels, (rows, 1))
        batch[:, outside] = rng.random((rows, outside.size))
        decisions, _ = rule.decide_batch(g, batch)
        if np.any(decisions[:, u] != baseline[0, u]):
            return False
        done += rows
    return True
