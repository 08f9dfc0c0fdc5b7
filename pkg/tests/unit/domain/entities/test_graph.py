"""Unit tests for Graph entity."""

import numpy as np
import pytest

from localfactor.domain.entities.graph import Graph
from localfactor.domain.errors.domain_errors import InvalidGraphError, InvalidVertexError
from tests.conftest import complete_graph, cycle_graph, path_graph, petersen_graph


class TestGraph:
    """Test cases for Graph entity."""

    def test_from_edges_builds_sorted_adjacency(self):
        """Test neighbor lists come out sorted regardless of input order."""
        g = Graph.from_edges(4, [(3, 0), (1, 0), (2, 0)])

        assert g.n == 4
        assert g.edge_count == 3
        assert g.adjacency(0).tolist() == [1, 2, 3]
        assert g.adjacency(3).tolist() == [0]

    def test_edges_are_lexicographic_pairs(self):
        """Test edges() lists u < v pairs in lexicographic order."""
        g = Graph.from_edges(4, [(2, 3), (1, 0), (3, 0)])

        assert g.edges().tolist() == [[0, 1], [0, 3], [2, 3]]

    def test_empty_graph(self):
        """Test the edgeless graph."""
        g = Graph.empty(5)

        assert g.edge_count == 0
        assert g.degrees().tolist() == [0] * 5
        assert g.edges().shape == (0, 2)

    def test_degrees_and_regularity(self):
        """Test degree helpers on the Petersen graph."""
        g = petersen_graph()

        assert g.edge_count == 15
        assert g.is_regular(3)
        assert not g.is_regular(2)
        assert g.degree(7) == 3

    def test_has_edge(self):
        """Test edge membership is symmetric."""
        g = path_graph(3)

        assert g.has_edge(0, 1)
        assert g.has_edge(1, 0)
        assert not g.has_edge(0, 2)

    def test_is_independent(self):
        """Test independence of vertex sets."""
        g = cycle_graph(4)

        assert g.is_independent([0, 2])
        assert not g.is_independent([0, 1])
        assert g.is_independent([])

    def test_self_loop_rejected(self):
        """Test self-loops raise InvalidGraphError."""
        with pytest.raises(InvalidGraphError, match="Self-loops"):
            Graph.from_edges(3, [(1, 1)])

    def test_duplicate_edge_rejected(self):
        """Test duplicate edges in either orientation are rejected."""
        with pytest.raises(InvalidGraphError, match="Duplicate"):
            Graph.from_edges(3, [(0, 1), (1, 0)])

    def test_out_of_range_endpoint_rejected(self):
        """Test endpoints outside [0, n) are rejected."""
        with pytest.raises(InvalidGraphError):
            Graph.from_edges(3, [(0, 3)])

    def test_asymmetric_csr_rejected(self):
        """Test direct construction validates symmetry."""
        with pytest.raises(InvalidGraphError, match="symmetric"):
            Graph(n=2, indptr=np.array([0, 1, 1]), indices=np.array([1]))

    def test_arrays_are_read_only(self):
        """Test CSR arrays cannot be mutated after construction."""
        g = complete_graph(3)

        with pytest.raises(ValueError):
            g.indices[0] = 2

    def test_check_vertex(self):
        """Test vertex id validation."""
        g = path_graph(3)

        with pytest.raises(InvalidVertexError):
            g.degree(3)
        with pytest.raises(InvalidVertexError):
            g.adjacency(-1)

    def test_equality_compares_structure(self):
        """Test graphs with the same edges are equal."""
        assert Graph.from_edges(3, [(0, 1), (1, 2)]) == path_graph(3)
        assert Graph.from_edges(3, [(0, 2)]) != path_graph(3)

    def test_relabeled(self):
        """Test relabeling maps every edge through the permutation."""
        g = path_graph(3).relabeled(np.array([2, 0, 1]))

        assert g.edges().tolist() == [[0, 1], [0, 2]]

    def test_relabeled_rejects_non_permutation(self):
        """Test relabeling needs a permutation."""
        with pytest.raises(InvalidGraphError):
            path_graph(3).relabeled(np.array([0, 0, 1]))

    def test_source_incidence_shape(self):
        """Test the directed-edge incidence matrix maps every edge to its source."""
        g = cycle_graph(5)
        incidence = g.source_incidence

        assert incidence.shape == (10, 5)
        assert np.asarray(incidence.sum(axis=0)).ravel().tolist() == [2.0] * 5
