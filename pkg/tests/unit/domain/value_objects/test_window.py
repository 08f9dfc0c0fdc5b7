"""Unit tests for RatePoint and Window value objects."""

import math

import pytest

from localfactor.domain.value_objects.overlap_query import GraphModel
from localfactor.domain.value_objects.rate_point import RatePoint, Window


def make_window(zhat_max, empty_by_theory=False, d=100):
    return Window(
        d=d,
        beta=0.9,
        model=GraphModel.ER,
        zhat_max=zhat_max,
        theoretical_bound=math.sqrt(0.62),
        empty_by_theory=empty_by_theory,
        grid_points=101,
    )


class TestRatePoint:
    """Test cases for RatePoint."""

    def test_sign(self):
        """Test negativity flag."""
        assert RatePoint(d=10, s=0.3, x=0.1, value=-0.01).is_negative
        assert not RatePoint(d=10, s=0.3, x=0.1, value=0.0).is_negative


class TestWindow:
    """Test cases for Window."""

    def test_empty(self):
        """Test a window without zhat_max is empty."""
        assert make_window(None).empty
        assert not make_window(0.5).empty

    def test_empty_by_theory_carries_no_width(self):
        """Test the invariant between the two emptiness flags."""
        with pytest.raises(ValueError):
            make_window(0.3, empty_by_theory=True)

    def test_negative_width_rejected(self):
        """Test zhat_max cannot be negative."""
        with pytest.raises(ValueError):
            make_window(-0.1)

    def test_forbidden_k_range(self):
        """Test the integer overlap range scales with n log d / d."""
        window = make_window(0.5, d=100)
        scale = 1000 * math.log(100) / 100

        lo, hi = window.forbidden_k_range(1000)
        assert lo == math.ceil(0.5 * scale)
        assert hi == math.floor(1.5 * scale)

    def test_forbidden_k_range_empty_window(self):
        """Test an empty window forbids nothing."""
        assert make_window(None).forbidden_k_range(1000) is None

    def test_csv_row(self):
        """Test empty windows write a blank zhat_max."""
        row = make_window(None).to_csv_row()

        assert row["zhat_max"] == ""
        assert row["model"] == "er"
