"""Coupling DTOs."""

from dataclasses import dataclass
from typing import Optional

from localfactor.domain.value_objects.estimates import BisectionResult
from localfactor.domain.value_objects.rule_descriptor import RuleDescriptor
from localfactor.domain.value_objects.run_records import OverlapRecord


@dataclass
class OverlapSummaryDTO:
    rule: RuleDescriptor
    n: int
    d: int
    p: float
    seed: int
    records: list[OverlapRecord]
    mean_overlap_density: float
    overlap_std_error: float
    mean_density: float
    mean_non_tree_fraction: Optional[float]


@dataclass
class BisectionDTO:
    rule: RuleDescriptor
    d: int
    target: float
    tol: float
    trials: int
    seed: int
    result: BisectionResult


# --- Request ---

@dataclass
class EstimateGammaRequest:
    rule: RuleDescriptor
    d: int
    p: float
    trials: int
    seed: int


@dataclass
class GammaSweepRequest:
    rule: RuleDescriptor
    d: int
    p_grid: list[float]
    trials: int
    seed: int


@dataclass
class FindPRequest:
    rule: RuleDescriptor
    d: int
    target: float
    tol: float
    trials: int
    seed: int


@dataclass
class OverlapExperimentRequest:
    rule: RuleDescriptor
    n: int
    d: int
    p: float
    seed: int
    trials: int = 1
    count_non_tree: bool = False

