"""Independence policy."""

import numpy as np

from localfactor.domain.entities.graph import Graph
from localfactor.domain.errors.domain_errors import IndependenceViolationError


class IndependencePolicy:
    """Domain policy guarding the output of local rules."""

    @staticmethod
    def ensure_independent(graph: Graph, members: np.ndarray) -> None:
        """
        Check that a boolean membership vector selects an independent set.

        Raises:
            IndependenceViolationError: If some edge has both endpoints selected
        """
        src, dst = graph.directed_edges
        both = members[src] & members[dst]
        if np.any(both):
            i = int(np.argmax(both))
            raise IndependenceViolationError(
                f"Rule selected adjacent vertices {int(src[i])} and {int(dst[i])}"
            )

    @staticmethod
    def ensure_independent_batch(graph: Graph, decisions: np.ndarray) -> None:
        """
        Row-wise independence check for a (B, n) decision matrix.

        Raises:
            IndependenceViolationError: If any row selects an edge
        """
        src, dst = graph.directed_edges
        bad = np.any(decisions[:, src] & decisions[:, dst], axis=1)
        if np.any(bad):
            raise IndependenceViolationError(
                f"Rule selected adjacent vertices in trial row {int(np.argmax(bad))}"
            )
