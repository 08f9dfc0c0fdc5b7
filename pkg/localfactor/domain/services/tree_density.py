"""Root-acceptance probabilities on the canonical tree."""

from collections.abc import Sequence

import numpy as np

from localfactor.domain.entities.canonical_tree import CanonicalTree
from localfactor.domain.errors.domain_errors import InvalidDegreeError
from localfactor.domain.services.local_rules import LocalRule
from localfactor.domain.value_objects.rule_descriptor import RuleDescriptor, RuleFamily

ROOT = 0


def exact_tree_density(descriptor: RuleDescriptor, d: int) -> float:
    """
    Closed-form P(root accepted) on the infinite d-regular tree.

    For T-round greedy let c_t be the probability that a child has not joined
    before round t when viewed inside its own subtree: c_0 = 1 and
    c_{t+1} = c_t - (c_t^d - (c_t - 1/T)^d)/d. The root joins in round t with
    probability (c_t^(d+1) - (c_t - 1/T)^(d+1))/(d+1). local-min is T = 1.
    """
    if d < 1:
        raise InvalidDegreeError(f"Degree must be at least 1, got {d}")
    if descriptor.family is RuleFamily.CUSTOM_TABLE:
        table, default = descriptor.thresholds()
        tau = table.get(d, default)
        return (1.0 - (1.0 - tau) ** (d + 1)) / (d + 1)

    rounds = 1 if descriptor.family is RuleFamily.LOCAL_MIN else descriptor.rounds
    width = 1.0 / rounds
    c = 1.0
    alpha = 0.0
    for _ in range(rounds):
        alpha += (c ** (d + 1) - (c - width) ** (d + 1)) / (d + 1)
        c -= (c**d - (c - width) ** d) / d
    return alpha


def count_root_accepts(
    rule: LocalRule, tree: CanonicalTree, rng: np.random.Generator, rows: int
) -> int:
    """Accepted roots among `rows` i.i.d. uniform labelings of the tree."""
    x = rng.random((rows, tree.n))
    decisions, _ = rule.decide_batch(tree.graph, x)
    return int(np.count_nonzero(decisions[:, ROOT]))


def count_joint_accepts(
    rule: LocalRule,
    tree: CanonicalTree,
    rng: np.random.Generator,
    rows: int,
    grid: Sequence[float],
) -> tuple[int, np.ndarray]:
    """
    Joint root acceptances under p-correlated labelings, for every p in grid.

    x is drawn first, then the thresholds w, then the fresh labels z; all grid
    points share them. Returns the plain acceptance count of x alongside, which
    equals the p = 1 count.
    """
    x = rng.random((rows, tree.n))
    w = rng.random((rows, tree.n))
    z = rng.random((rows, tree.n))
    fx = rule.decide_batch(tree.graph, x)[0][:, ROOT]
    both = np.zeros(len(grid), dtype=np.int64)
    for i, p in enumerate(grid):
        y = np.where(w < p, x, z)
        fy = rule.decide_batch(tree.graph, y)[0][:, ROOT]
        both[i] = np.count_nonzero(fx & fy)
    return int(np.count_nonzero(fx)), both
