"""Unit tests for the coupling service."""

import numpy as np
import pytest

from localfactor.domain.errors.domain_errors import BisectionError, TargetOutOfRangeError
from localfactor.domain.services.coupling import bisect_gamma, overlap_trial
from localfactor.domain.services.graph_generation import ConfigurationModelSampler
from localfactor.domain.services.local_rules import build_rule
from localfactor.domain.value_objects.decoration import CoupledDecoration
from localfactor.domain.value_objects.estimates import GammaEstimate
from localfactor.domain.value_objects.rule_descriptor import RuleDescriptor


def smooth_gamma(p: float) -> GammaEstimate:
    """A monotone stand-in for gamma: 1/16 at p = 0 rising to 1/4 at p = 1."""
    return GammaEstimate(p=p, gamma_hat=0.0625 + 0.1875 * p**2, std_error=0.0, trials=1)


class TestOverlapTrial:
    """Test cases for overlap_trial."""

    def test_p_one_gives_identical_sets(self, rng):
        """Test identical decorations give I = J."""
        rule = build_rule(RuleDescriptor.local_min())
        sample = ConfigurationModelSampler.sample(200, 3, rng)
        coupled = CoupledDecoration.sample(200, 1.0, rng)

        record = overlap_trial(rule, sample, coupled, trial=4)

        assert record.trial == 4
        assert record.intersection == record.size_x == record.size_y
        assert record.non_tree is None

    def test_non_tree_count_is_optional(self, rng):
        """Test the defect count is attached on request."""
        rule = build_rule(RuleDescriptor.local_min())
        sample = ConfigurationModelSampler.sample(200, 3, rng)
        coupled = CoupledDecoration.sample(200, 0.5, rng)

        record = overlap_trial(rule, sample, coupled, count_non_tree=True)

        assert record.non_tree is not None
        assert 0 <= record.non_tree <= 200
        assert record.intersection <= min(record.size_x, record.size_y)
        assert record.loops == sample.loop_count


class TestBisectGamma:
    """Test cases for bisect_gamma."""

    def test_endpoint_one_accepted_immediately(self):
        """Test a target at gamma(1) returns p = 1 after one evaluation."""
        result = bisect_gamma(smooth_gamma, 0.25, 0.001, 60)

        assert result.p == 1.0
        assert result.iterations == 1

    def test_endpoint_zero_accepted(self):
        """Test a target at gamma(0) returns p = 0."""
        result = bisect_gamma(smooth_gamma, 0.0625, 0.001, 60)

        assert result.p == 0.0
        assert result.iterations == 2

    def test_interior_target(self):
        """Test bisection lands within tol of an interior target."""
        result = bisect_gamma(smooth_gamma, 0.15, 0.0005, 60)

        assert abs(result.gamma_hat - 0.15) <= 0.0005
        assert result.p == pytest.approx(np.sqrt((0.15 - 0.0625) / 0.1875), abs=0.01)
        assert result.anomalies == ()

    def test_target_out_of_range(self):
        """Test targets outside the endpoint estimates are rejected."""
        with pytest.raises(TargetOutOfRangeError):
            bisect_gamma(smooth_gamma, 0.5, 0.001, 60)

    def test_non_monotone_estimate_is_reported(self):
        """Test an estimate outside the bracket is recorded and the search continues."""
        seen = []

        def bumpy(p: float) -> GammaEstimate:
            value = 0.35 if p == 0.5 else 0.1 + 0.2 * p
            return GammaEstimate(p=p, gamma_hat=value, std_error=0.0, trials=1)

        result = bisect_gamma(
            bumpy, 0.2, 0.001, 60, on_anomaly=lambda p, g, lo, hi: seen.append((p, g))
        )

        assert seen == [(0.5, 0.35)]
        assert result.anomalies == (0.5,)
        assert abs(result.gamma_hat - 0.2) <= 0.001

    def test_iteration_budget(self):
        """Test an unreachable tolerance exhausts the budget."""

        def step(p: float) -> GammaEstimate:
            return GammaEstimate(p=p, gamma_hat=0.1 if p < 0.3 else 0.3, std_error=0.0, trials=1)

        with pytest.raises(BisectionError):
            bisect_gamma(step, 0.2, 0.001, 10)
