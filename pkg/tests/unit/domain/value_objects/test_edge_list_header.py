"""Unit tests for EdgeListHeader value object."""

import pytest

from localfactor.domain.errors.domain_errors import EdgeListFormatError
from localfactor.domain.value_objects.edge_list_header import EdgeListHeader
from localfactor.domain.value_objects.overlap_query import GraphModel


class TestEdgeListHeader:
    """Test cases for EdgeListHeader."""

    def test_format_integer_degree(self):
        """Test integral degrees are written without a decimal point."""
        header = EdgeListHeader(n=10, model=GraphModel.REG, d=3, seed=7, loops=1, multi=2)

        assert header.format() == "# localfactor-graph v1 n=10 model=reg d=3 seed=7 loops=1 multi=2"

    def test_parse_fractional_degree(self):
        """Test Erdős–Rényi headers keep fractional degrees."""
        header = EdgeListHeader.parse(
            "# localfactor-graph v1 n=50 model=er d=2.5 seed=1 loops=0 multi=0\n"
        )

        assert header == EdgeListHeader(n=50, model=GraphModel.ER, d=2.5, seed=1)

    def test_parse_inverts_format(self):
        """Test format() output parses back."""
        header = EdgeListHeader(n=4, model=GraphModel.REG, d=1, seed=0)

        assert EdgeListHeader.parse(header.format()) == header

    @pytest.mark.parametrize(
        "line",
        [
            "",
            "# localfactor-graph v2 n=4 model=reg d=1 seed=0 loops=0 multi=0",
            "# localfactor-graph v1 n=4 model=ba d=1 seed=0 loops=0 multi=0",
            "# localfactor-graph v1 n=4 model=reg d=1 seed=0",
            "# localfactor-graph v1 n=4 model=reg d=1-2 seed=0 loops=0 multi=0",
        ],
    )
    def test_malformed_headers(self, line):
        """Test malformed header lines raise EdgeListFormatError naming line 1."""
        with pytest.raises(EdgeListFormatError, match="line 1"):
            EdgeListHeader.parse(line)
