"""Local independence rules, vectorized over batches of labelings."""

from abc import ABC, abstractmethod
from typing import Optional

import numpy as np

from localfactor.domain.entities.graph import Graph
from localfactor.domain.errors.domain_errors import InvalidRuleError, MissingLabelsError
from localfactor.domain.value_objects.rule_descriptor import RuleDescriptor, RuleFamily


def _per_vertex_any(graph: Graph, edge_flags: np.ndarray) -> np.ndarray:
    """OR of directed-edge flags grouped by source vertex: (B, 2m) -> (B, n)."""
    if edge_flags.shape[1] == 0:
        return np.zeros((edge_flags.shape[0], graph.n), dtype=bool)
    counts = graph.source_incidence.T @ edge_flags.T.astype(np.float64)
    return np.asarray(counts).T > 0


class LocalRule(ABC):
    """
    An r-local independence function.

    `decide_batch` evaluates every vertex for each row of a (B, n) label
    matrix. Equal labels are ordered by `priority` (vertex id by default).
    """

    def __init__(self, descriptor: RuleDescriptor) -> None:
        self.descriptor = descriptor

    @property
    def radius(self) -> int:
        """Locality radius."""
        return self.descriptor.radius

    @abstractmethod
    def decide_batch(
        self, graph: Graph, labels: np.ndarray, priority: Optional[np.ndarray] = None
    ) -> tuple[np.ndarray, int]:
        """
        Decisions for every vertex.

        Returns:
            (bool array of shape (B, n), number of tied label comparisons)
        """
        ...

    @staticmethod
    def _prepare(
        graph: Graph, labels: np.ndarray, priority: Optional[np.ndarray]
    ) -> tuple[np.ndarray, np.ndarray, int]:
        """
        Validate labels and compute, per directed edge (u, v), whether v beats u.

        Returns:
            (2-D labels, beats flags (B, 2m), tie count)
        """
        batch = np.atleast_2d(np.asarray(labels, dtype=np.float64))
        if batch.shape[1] != graph.n:
            raise MissingLabelsError(
                f"Decoration covers {batch.shape[1]} vertices, graph has {graph.n}"
            )
        src, dst = graph.directed_edges
        pri = np.arange(graph.n) if priority is None else np.asarray(priority)
        xs = batch[:, src]
        xd = batch[:, dst]
        tied = xd == xs
        beats = (xd < xs) | (tied & (pri[dst] < pri[src])[np.newaxis, :])
        return batch, beats, int(np.count_nonzero(tied)) // 2


class LocalMinRule(LocalRule):
    """Accept u iff its label is the strict minimum of its closed neighborhood."""

    def decide_batch(
        self, graph: Graph, labels: np.ndarray, priority: Optional[np.ndarray] = None
    ) -> tuple[np.ndarray, int]:
        _, beats, ties = self._prepare(graph, labels, priority)
        return ~_per_vertex_any(graph, beats), ties


class MultiRoundGreedyRule(LocalRule):
    """
    T-round greedy.

    [0, 1] is split into T equal intervals; u is scheduled in the round of its
    interval. In round t a scheduled vertex joins unless a neighbor joined
    earlier or a neighbor of the same round has a smaller label.
    """

    def decide_batch(
        self, graph: Graph, labels: np.ndarray, priority: Optional[np.ndarray] = None
    ) -> tuple[np.ndarray, int]:
        batch, beats, ties = self._prepare(graph, labels, priority)
        rounds = self.descriptor.rounds
        src, dst = graph.directed_edges
        schedule = np.minimum((batch * rounds).astype(np.int64), rounds - 1)

        joined = np.zeros(batch.shape, dtype=bool)
        blocked = np.zeros(batch.shape, dtype=bool)
        for t in range(rounds):
            active = schedule == t
            rival = _per_vertex_any(graph, beats & active[:, dst])
            joins = active & ~blocked & ~rival
            joined |= joins
            blocked |= _per_vertex_any(graph, joins[:, dst])
        return joined, ties


class CustomTableRule(LocalRule):
    """
    Local minimum gated by a per-degree threshold table.

    u is accepted iff it is a strict local minimum and x(u) <= tau(deg u).
    """

    def __init__(self, descriptor: RuleDescriptor) -> None:
        super().__init__(descriptor)
        self.table, self.default = descriptor.thresholds()

    def threshold_for(self, degree: int) -> float:
        """Acceptance threshold for a vertex of the given degree."""
        return self.table.get(degree, self.default)

    def decide_batch(
        self, graph: Graph, labels: np.ndarray, priority: Optional[np.ndarray] = None
    ) -> tuple[np.ndarray, int]:
        batch, beats, ties = self._prepare(graph, labels, priority)
        degrees = graph.degrees()
        tau = np.array([self.threshold_for(int(k)) for k in degrees], dtype=np.float64)
        return ~_per_vertex_any(graph, beats) & (batch <= tau), ties


def build_rule(descriptor: RuleDescriptor) -> LocalRule:
    """Instantiate the rule a descriptor names."""
    if descriptor.family is RuleFamily.LOCAL_MIN:
        return LocalMinRule(descriptor)
    if descriptor.family is RuleFamily.MULTI_ROUND_GREEDY:
        return MultiRoundGreedyRule(descriptor)
    if descriptor.family is RuleFamily.CUSTOM_TABLE:
        return CustomTableRule(descriptor)
    raise InvalidRuleError(f"No implementation for {descriptor.family}")
