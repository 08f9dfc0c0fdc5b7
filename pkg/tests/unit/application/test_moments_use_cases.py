"""Unit tests for the moment, rate and window use cases."""

import math

import pytest

from localfactor.application.dto.moments_dto import (
    MinDRequest,
    MomentRequest,
    RateScanRequest,
    WindowRequest,
)
from localfactor.application.errors.app_errors import ValidationError
from localfactor.application.use_cases.moments.evaluate_overlap_moment import (
    EvaluateOverlapMomentUseCase,
)
from localfactor.application.use_cases.moments.find_min_d import FindMinDUseCase
from localfactor.application.use_cases.moments.scan_rate import ScanRateUseCase
from localfactor.application.use_cases.moments.solve_window import SolveWindowUseCase
from localfactor.domain.errors.domain_errors import OverlapConstraintError, RateDomainError
from localfactor.domain.value_objects.overlap_query import GraphModel


class TestEvaluateOverlapMomentUseCase:
    """Test cases for EvaluateOverlapMomentUseCase."""

    def test_single_k(self, experiment_log):
        """Test one k yields one row with the known value."""
        dto = EvaluateOverlapMomentUseCase(experiment_log).execute(
            MomentRequest(model=GraphModel.ER, n=4, d=1, m=2, k=1)
        )

        [row] = dto.rows
        assert row.log_value == pytest.approx(math.log(13.5))
        assert experiment_log.of_type("moment.evaluated")[0]["rows"] == 1

    def test_all_k(self, experiment_log):
        """Test k defaults to the whole range [max(0, 2m - n), m]."""
        dto = EvaluateOverlapMomentUseCase(experiment_log).execute(
            MomentRequest(model=GraphModel.REG, n=10, d=3, m=6)
        )

        assert [row.query.k for row in dto.rows] == [2, 3, 4, 5, 6]

    def test_single_l(self, experiment_log):
        """Test an explicit l evaluates that term only."""
        dto = EvaluateOverlapMomentUseCase(experiment_log).execute(
            MomentRequest(model=GraphModel.REG, n=10, d=3, m=3, k=1, l=2)
        )

        assert dto.rows[0].query.l == 2

    def test_m_above_n(self, experiment_log):
        """Test m > n is a validation error."""
        with pytest.raises(ValidationError):
            EvaluateOverlapMomentUseCase(experiment_log).execute(
                MomentRequest(model=GraphModel.ER, n=4, d=1, m=5, k=1)
            )

    def test_regular_parity(self, experiment_log):
        """Test the regular model rejects odd n*d."""
        with pytest.raises(OverlapConstraintError):
            EvaluateOverlapMomentUseCase(experiment_log).execute(
                MomentRequest(model=GraphModel.REG, n=5, d=3, m=2, k=1)
            )


class TestScanRateUseCase:
    """Test cases for ScanRateUseCase."""

    def test_scan(self, experiment_log):
        """Test one point per zhat and a logged count of negative points."""
        dto = ScanRateUseCase(experiment_log).execute(
            RateScanRequest(model=GraphModel.ER, d=1000, beta=0.9, zhat=[-0.5, 0.0, 0.5])
        )

        assert len(dto.points) == 3
        assert experiment_log.of_type("rate.scanned")[0]["negative"] == 3

    @pytest.mark.parametrize(
        "d,beta,zhat", [(1.0, 0.9, [0.0]), (100, 0.0, [0.0]), (100, 0.9, [])]
    )
    def test_invalid(self, experiment_log, d, beta, zhat):
        """Test degenerate degrees, betas and grids are validation errors."""
        with pytest.raises(ValidationError):
            ScanRateUseCase(experiment_log).execute(
                RateScanRequest(model=GraphModel.REG, d=d, beta=beta, zhat=zhat)
            )


class TestSolveWindowUseCase:
    """Test cases for SolveWindowUseCase."""

    def test_empty_by_theory(self, experiment_log):
        """Test beta at 1/sqrt(2) is reported empty and logged."""
        window = SolveWindowUseCase(experiment_log, grid_points=201).execute(
            WindowRequest(model=GraphModel.ER, d=1000, beta=0.707107)
        )

        assert window.empty_by_theory
        assert experiment_log.of_type("window.solved")[0]["empty_by_theory"] is True

    def test_open_window(self, experiment_log):
        """Test beta = 0.9 at d = 1000 gives a window past 70% of the bound."""
        window = SolveWindowUseCase(experiment_log, grid_points=401).execute(
            WindowRequest(model=GraphModel.REG, d=1000, beta=0.9)
        )

        assert window.zhat_max >= 0.7 * math.sqrt(0.62)


class TestFindMinDUseCase:
    """Test cases for FindMinDUseCase."""

    def test_search(self, experiment_log):
        """Test the returned degree meets the target and the search is logged."""
        target = 0.7 * math.sqrt(0.62)
        dto = FindMinDUseCase(experiment_log, grid_points=401, d_start=100).execute(
            MinDRequest(model=GraphModel.ER, beta=0.9, zhat_target=target)
        )

        assert dto.d >= 100
        assert dto.window.zhat_max >= target
        assert dto.schedule[0][0] == 100
        [event] = experiment_log.of_type("window.min_d")
        assert event["d"] == dto.d
        assert event["evaluations"] == len(dto.schedule)

    def test_saturation_reported(self, experiment_log):
        """Test a grid-edge window is flagged and can be rejected."""
        use_case = FindMinDUseCase(experiment_log, grid_points=401)
        accepted = use_case.execute(MinDRequest(model=GraphModel.REG, beta=0.8, zhat_target=0.3))
        rejected = use_case.execute(
            MinDRequest(model=GraphModel.ER, beta=0.75, zhat_target=0.3, accept_saturated=False)
        )

        assert accepted.saturated
        assert accepted.d == 3
        assert not rejected.saturated
        assert rejected.d > accepted.d
        first, second = experiment_log.of_type("window.min_d")
        assert first["saturated"] is True
        assert second["saturated"] is False

    def test_beta_below_threshold(self, experiment_log):
        """Test beta = 0.6 is a rate-domain error."""
        with pytest.raises(RateDomainError):
            FindMinDUseCase(experiment_log).execute(
                MinDRequest(model=GraphModel.ER, beta=0.6, zhat_target=0.1)
            )
