"""Unit tests for ClusteringDemoUseCase."""

import math

import pytest

from localfactor.application.dto.demo_dto import ClusteringDemoRequest
from localfactor.application.errors.app_errors import ValidationError
from localfactor.application.use_cases._monte_carlo import MonteCarloLimits
from localfactor.application.use_cases.coupling.gamma_sweep import GammaSweepUseCase
from localfactor.application.use_cases.coupling.overlap_experiment import OverlapExperimentUseCase
from localfactor.application.use_cases.harness.clustering_demo import (
    ClusteringDemoUseCase,
    implied_beta,
    normalized_overlap,
)
from localfactor.application.use_cases.localalg.estimate_density import EstimateDensityUseCase
from localfactor.domain.value_objects.rule_descriptor import RuleDescriptor


def build_demo(
    streams, executor, experiment_log, limits: MonteCarloLimits
) -> ClusteringDemoUseCase:
    return ClusteringDemoUseCase(
        EstimateDensityUseCase(streams, executor, experiment_log, limits),
        GammaSweepUseCase(streams, executor, experiment_log, limits),
        OverlapExperimentUseCase(streams, executor, experiment_log),
        experiment_log,
        grid_points=401,
    )


class TestNormalization:
    """Test cases for implied_beta and normalized_overlap."""

    def test_round_trip_at_log_d_over_d(self):
        """Test a density of log d / d maps to beta = zhat = 0."""
        d = 50
        density = math.log(d) / d

        assert implied_beta(density, d) == pytest.approx(0.0, abs=1e-12)
        assert normalized_overlap(density, d) == pytest.approx(0.0, abs=1e-12)


class TestClusteringDemoUseCase:
    """Test cases for ClusteringDemoUseCase."""

    def test_local_min_sits_below_the_window(self, streams, executor, experiment_log):
        """Test local-min at d = 50 has beta_hat < 0, so the window is absent and noted."""
        demo = build_demo(streams, executor, experiment_log, MonteCarloLimits())

        dto = demo.execute(
            ClusteringDemoRequest(
                rule=RuleDescriptor.local_min(),
                d=50,
                n=1000,
                p_grid=[0.0, 0.5, 1.0],
                trials=4000,
                seed=7,
            )
        )

        assert dto.alpha_source == "tree"
        assert dto.beta_hat < 0
        assert dto.window is None
        assert any("<= 0" in note for note in dto.notes)
        assert [row.p for row in dto.rows] == [0.0, 0.5, 1.0]
        assert not any(row.inside_window for row in dto.rows)
        assert dto.criteria["overlaps_outside_window"]
        assert {"gamma_lipschitz", "p0_matches_alpha_squared", "p1_matches_alpha"} <= set(
            dto.criteria
        )
        assert dto.curve is not None
        assert dto.rows[-1].gamma_hat == dto.alpha_hat
        assert experiment_log.of_type("demo.completed")[0]["zhat_max"] is None

    def test_tree_sweep_skipped(self, streams, executor, experiment_log):
        """Test an oversized tree takes alpha from the graph and drops the p = 1 check."""
        limits = MonteCarloLimits(max_tree_vertices=50)
        demo = build_demo(streams, executor, experiment_log, limits)

        dto = demo.execute(
            ClusteringDemoRequest(
                rule=RuleDescriptor.local_min(),
                d=20,
                n=1000,
                p_grid=[0.0, 1.0],
                trials=1000,
                seed=3,
            )
        )

        assert dto.tree_sweep_skipped
        assert dto.alpha_source == "graph"
        assert dto.curve is None
        assert dto.exact_tree_density == pytest.approx(1 / 21)
        assert "p1_matches_alpha" not in dto.criteria
        assert "gamma_lipschitz" not in dto.criteria
        assert any("skipped" in note for note in dto.notes)

    def test_degree_too_small(self, streams, executor, experiment_log):
        """Test d < 3 is a validation error."""
        demo = build_demo(streams, executor, experiment_log, MonteCarloLimits())

        with pytest.raises(ValidationError):
            demo.execute(
                ClusteringDemoRequest(
                    rule=RuleDescriptor.local_min(), d=2, n=100, p_grid=[1.0], trials=10, seed=1
                )
            )
