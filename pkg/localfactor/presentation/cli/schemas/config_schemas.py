"""Experiment configuration schemas, one per subcommand.

Each schema re-validates the preconditions of the operations it feeds, so a
bad invocation fails before any work starts. Domain errors raised inside the
validators propagate unchanged and keep their names.
"""

from typing import Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from localfactor.domain.errors.domain_errors import InvalidDegreeError, RateDomainError
from localfactor.domain.policies.coupling_policy import CouplingPolicy
from localfactor.domain.services.graph_generation import (
    ConfigurationModelSampler,
    ErdosRenyiSampler,
)
from localfactor.domain.services.window_solver import theoretical_bound
from localfactor.domain.value_objects.overlap_query import GraphModel
from localfactor.domain.value_objects.rule_descriptor import RuleDescriptor

SEED_LIMIT = 2**64
THEORY_TOLERANCE = 1e-6


class ExperimentConfig(BaseModel):
    """Fields shared by every subcommand."""

    model_config = ConfigDict(extra="forbid", frozen=True)

    threads: Optional[int] = Field(default=None, ge=1)
    output: Optional[str] = None


class SeededConfig(ExperimentConfig):
    seed: int = Field(..., ge=0, lt=SEED_LIMIT)


class RuleConfig(SeededConfig):
    rule: str

    @field_validator("rule")
    @classmethod
    def canonical_rule(cls, v: str) -> str:
        """Store the canonical descriptor text."""
        return RuleDescriptor.parse(v).format()

    def descriptor(self) -> RuleDescriptor:
        return RuleDescriptor.parse(self.rule)


class GenConfig(SeededConfig):
    model: GraphModel
    n: int = Field(..., ge=1)
    d: float = Field(..., ge=0)
    require_simple: bool = False
    tree_radius: Optional[int] = Field(default=None, ge=0)

    @model_validator(mode="after")
    def check_model(self) -> "GenConfig":
        if self.model is GraphModel.ER:
            ErdosRenyiSampler.validate(self.n, self.d)
        else:
            if not float(self.d).is_integer():
                raise InvalidDegreeError(f"the regular model needs an integer d, got {self.d}")
            ConfigurationModelSampler.validate(self.n, int(self.d))
        return self


class DensityConfig(RuleConfig):
    d: int = Field(..., ge=2)
    trials: int = Field(..., ge=1)
    # Graph runs alongside the tree estimate
    n: Optional[int] = Field(default=None, ge=1)
    graph_trials: int = Field(default=1, ge=1)

    @model_validator(mode="after")
    def check_graphs(self) -> "DensityConfig":
        if self.n is not None:
            ConfigurationModelSampler.validate(self.n, self.d)
        return self


class GammaConfig(RuleConfig):
    d: int = Field(..., ge=2)
    trials: int = Field(..., ge=1)
    p: Optional[float] = None
    target: Optional[float] = None
    tol: Optional[float] = Field(default=None, gt=0)

    @model_validator(mode="after")
    def check_mode(self) -> "GammaConfig":
        if (self.p is None) == (self.target is None):
            raise ValueError("give exactly one of --p or --target")
        if self.p is not None:
            CouplingPolicy.validate_probability(self.p)
        elif self.tol is None:
            raise ValueError("--target needs --tol")
        else:
            CouplingPolicy.validate_tolerance(self.target, self.tol, self.trials)
        return self


class SweepConfig(RuleConfig):
    d: int = Field(..., ge=2)
    trials: int = Field(..., ge=1)
    p_grid: list[float]

    @field_validator("p_grid", mode="before")
    @classmethod
    def parse_grid(cls, v: str | list[float]) -> list[float]:
        """Parse p grid from comma-separated string."""
        if isinstance(v, str):
            return [float(p.strip()) for p in v.split(",") if p.strip()]
        return v

    @model_validator(mode="after")
    def check_grid(self) -> "SweepConfig":
        CouplingPolicy.validate_grid(self.p_grid)
        return self


class CoupleConfig(RuleConfig):
    n: int = Field(..., ge=1)
    d: int = Field(..., ge=1)
    p: float
    trials: int = Field(default=1, ge=1)
    count_non_tree: bool = False

    @model_validator(mode="after")
    def check_graph(self) -> "CoupleConfig":
        CouplingPolicy.validate_probability(self.p)
        ConfigurationModelSampler.validate(self.n, self.d)
        return self


class MomentsConfig(ExperimentConfig):
    model: GraphModel
    n: int = Field(..., ge=1)
    d: float = Field(..., gt=0)
    m: int = Field(..., ge=0)
    k: Optional[int] = Field(default=None, ge=0)
    l: Optional[int] = Field(default=None, ge=0)  # noqa: E741


class RateConfig(ExperimentConfig):
    model: GraphModel
    d: float = Field(..., gt=1)
    beta: float = Field(..., gt=0, le=1)
    zhat_min: float = Field(default=-0.99, gt=-1)
    zhat_max: float = Field(default=0.99)
    points: int = Field(default=199, ge=1)

    @model_validator(mode="after")
    def check_range(self) -> "RateConfig":
        if self.zhat_max < self.zhat_min:
            raise ValueError("--zhat-max must not be below --zhat-min")
        return self


class WindowConfig(ExperimentConfig):
    model: GraphModel
    beta: float = Field(..., gt=0, le=1)
    d: Optional[int] = Field(default=None, ge=3)
    grid_points: Optional[int] = Field(default=None, ge=3)


class MinDConfig(ExperimentConfig):
    model: GraphModel
    beta: float = Field(..., gt=0, le=1)
    zhat_target: float = Field(..., gt=0)
    reject_saturated: bool = False

    @model_validator(mode="after")
    def check_target(self) -> "MinDConfig":
        bound, empty = theoretical_bound(self.beta, THEORY_TOLERANCE)
        if empty:
            raise RateDomainError(f"beta={self.beta} must exceed 1/sqrt(2)")
        if self.zhat_target >= bound:
            raise RateDomainError(
                f"zhat_target must lie in (0, {bound:.6g}), got {self.zhat_target}"
            )
        return self


class DemoConfig(SweepConfig):
    n: int = Field(..., ge=1)
    graph_trials: int = Field(default=1, ge=1)

    @model_validator(mode="after")
    def check_demo(self) -> "DemoConfig":
        if self.d < 3:
            raise InvalidDegreeError(f"the demo needs d >= 3, got {self.d}")
        ConfigurationModelSampler.validate(self.n, self.d)
        return self
