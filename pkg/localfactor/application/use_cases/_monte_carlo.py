"""Block plan shared by the tree Monte Carlo use cases (internal, not a public use case)."""

from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np

from localfactor.application.errors.app_errors import ValidationError
from localfactor.application.ports.random_stream_port import RandomStreamPort, StreamPurpose
from localfactor.application.ports.trial_executor_port import TrialExecutorPort
from localfactor.domain.entities.canonical_tree import CanonicalTree, canonical_vertex_count
from localfactor.domain.services.local_rules import LocalRule
from localfactor.domain.services.tree_density import count_joint_accepts


@dataclass(frozen=True)
class MonteCarloLimits:
    trial_block_size: int = 65536
    max_block_cells: int = 2_000_000
    max_tree_vertices: int = 2_000_000


def plan_blocks(trials: int, tree_vertices: int, limits: MonteCarloLimits) -> list[tuple[int, int]]:
    """
    (block index, rows) pairs covering `trials` rows.

    Block sizes depend on the trial count, the tree and the limits only, so the
    plan is identical at any thread count.
    """
    if trials < 1:
        raise ValidationError(f"trials must be at least 1, got {trials}")
    rows = max(1, min(limits.trial_block_size, limits.max_block_cells // max(tree_vertices, 1)))
    plan = []
    done = 0
    block = 0
    while done < trials:
        size = min(rows, trials - done)
        plan.append((block, size))
        done += size
        block += 1
    return plan


def tree_fits(rule: LocalRule, d: int, limits: MonteCarloLimits) -> bool:
    """Whether T_{d,r+1} stays under the explicit-tree vertex cap."""
    return canonical_vertex_count(d, rule.radius + 1) <= limits.max_tree_vertices


def build_tree(rule: LocalRule, d: int) -> CanonicalTree:
    """T_{d,r+1} with its incidence structure computed up front for worker threads."""
    tree = CanonicalTree.build(d, rule.radius + 1)
    _ = tree.graph.source_incidence
    return tree


def joint_counts(
    streams: RandomStreamPort,
    executor: TrialExecutorPort,
    limits: MonteCarloLimits,
    rule: LocalRule,
    d: int,
    grid: Sequence[float],
    trials: int,
    seed: int,
) -> np.ndarray:
    """
    Joint root acceptances at every grid point, summed over all blocks.

    Block b reads stream (seed, TREE, b), the same stream the density
    estimate uses, so the p = 1 count equals the plain acceptance count.
    """
    if not tree_fits(rule, d, limits):
        raise ValidationError(
            f"T_{{{d},{rule.radius + 1}}} has {canonical_vertex_count(d, rule.radius + 1)} "
            f"vertices, above the cap of {limits.max_tree_vertices}"
        )
    tree = build_tree(rule, d)

    def run_block(block: tuple[int, int]) -> np.ndarray:
        index, rows = block
        rng = streams.stream(seed, StreamPurpose.TREE, index)
        return count_joint_accepts(rule, tree, rng, rows, grid)[1]

    counts = executor.map(run_block, plan_blocks(trials, tree.n, limits))
    return np.sum(counts, axis=0)
