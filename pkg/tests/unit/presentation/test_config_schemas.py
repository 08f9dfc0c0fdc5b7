"""Unit tests for the subcommand configuration schemas."""

import pydantic
import pytest

from localfactor.domain.errors.domain_errors import (
    InvalidDegreeError,
    InvalidProbabilityError,
    InvalidRuleError,
    ParityError,
    RateDomainError,
    ToleranceTooSmallError,
)
from localfactor.domain.value_objects.overlap_query import GraphModel
from localfactor.presentation.cli.schemas.config_schemas import (
    CoupleConfig,
    DemoConfig,
    GammaConfig,
    GenConfig,
    MinDConfig,
    RateConfig,
    SweepConfig,
)


class TestRuleConfig:
    """Test cases for rule parsing shared by the rule-driven configs."""

    def test_rule_is_stored_canonically(self):
        """Test short rule forms are normalized to the canonical descriptor."""
        config = CoupleConfig(rule="multi-round-greedy:T=3", seed=1, n=10, d=3, p=0.5)

        assert config.rule == config.descriptor().format()
        assert config.descriptor().rounds == 3

    def test_unknown_rule(self):
        """Test an unknown family keeps its domain error name."""
        with pytest.raises(InvalidRuleError):
            CoupleConfig(rule="best-rule", seed=1, n=10, d=3, p=0.5)

    @pytest.mark.parametrize("seed", [-1, 2**64])
    def test_seed_range(self, seed):
        """Test seeds outside [0, 2^64) fail validation."""
        with pytest.raises(pydantic.ValidationError):
            CoupleConfig(rule="local-min", seed=seed, n=10, d=3, p=0.5)

    def test_extra_fields_forbidden(self):
        """Test unknown fields are rejected."""
        with pytest.raises(pydantic.ValidationError):
            CoupleConfig(rule="local-min", seed=1, n=10, d=3, p=0.5, colour="red")


class TestGenConfig:
    """Test cases for GenConfig."""

    def test_parity(self):
        """Test odd n*d for the regular model raises ParityError."""
        with pytest.raises(ParityError):
            GenConfig(model=GraphModel.REG, n=3, d=1, seed=1)

    def test_fractional_regular_degree(self):
        """Test the regular model needs an integer degree."""
        with pytest.raises(InvalidDegreeError):
            GenConfig(model=GraphModel.REG, n=10, d=2.5, seed=1)

    def test_erdos_renyi_fractional_degree(self):
        """Test ER accepts fractional degrees."""
        assert GenConfig(model="er", n=10, d=2.5, seed=1).model is GraphModel.ER


class TestGammaConfig:
    """Test cases for GammaConfig."""

    def test_exactly_one_mode(self):
        """Test --p and --target are mutually exclusive and one is required."""
        with pytest.raises(pydantic.ValidationError, match="exactly one"):
            GammaConfig(rule="local-min", seed=1, d=3, trials=10)
        with pytest.raises(pydantic.ValidationError, match="exactly one"):
            GammaConfig(rule="local-min", seed=1, d=3, trials=10, p=0.5, target=0.1, tol=0.1)

    def test_target_needs_tol(self):
        """Test bisection mode requires a tolerance."""
        with pytest.raises(pydantic.ValidationError, match="--tol"):
            GammaConfig(rule="local-min", seed=1, d=3, trials=10, target=0.1)

    def test_tolerance_resolution(self):
        """Test a tolerance below 3 standard errors is refused."""
        with pytest.raises(ToleranceTooSmallError):
            GammaConfig(rule="local-min", seed=1, d=3, trials=100, target=0.1, tol=0.01)

    def test_probability_range(self):
        """Test p outside [0, 1] keeps its domain error name."""
        with pytest.raises(InvalidProbabilityError):
            GammaConfig(rule="local-min", seed=1, d=3, trials=10, p=1.5)


class TestSweepConfig:
    """Test cases for SweepConfig and DemoConfig."""

    def test_comma_separated_grid(self):
        """Test a comma-separated grid string is parsed."""
        config = SweepConfig(rule="local-min", seed=1, d=3, trials=10, p_grid="0, 0.5,1")

        assert config.p_grid == [0.0, 0.5, 1.0]

    def test_unsorted_grid(self):
        """Test grids must be strictly increasing."""
        with pytest.raises(InvalidProbabilityError):
            SweepConfig(rule="local-min", seed=1, d=3, trials=10, p_grid="0.5,0.1")

    def test_demo_degree(self):
        """Test the demo needs d >= 3."""
        with pytest.raises(InvalidDegreeError):
            DemoConfig(rule="local-min", seed=1, d=2, trials=10, p_grid="0,1", n=10)


class TestMomentSchemas:
    """Test cases for RateConfig and MinDConfig."""

    def test_beta_below_threshold(self):
        """Test min-d rejects beta <= 1/sqrt(2) with a rate-domain error."""
        with pytest.raises(RateDomainError):
            MinDConfig(model="er", beta=0.6, zhat_target=0.1)

    def test_target_above_bound(self):
        """Test min-d rejects targets at or above the bound."""
        with pytest.raises(RateDomainError):
            MinDConfig(model="reg", beta=0.9, zhat_target=0.8)

    def test_rate_range(self):
        """Test an inverted zhat range fails validation."""
        with pytest.raises(pydantic.ValidationError):
            RateConfig(model="er", d=100, beta=0.9, zhat_min=0.5, zhat_max=0.1)
