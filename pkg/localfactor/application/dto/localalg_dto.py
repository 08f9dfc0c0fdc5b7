"""Local rule DTOs."""

from dataclasses import dataclass
from typing import Optional

from localfactor.domain.value_objects.estimates import DensityEstimate
from localfactor.domain.value_objects.rule_descriptor import RuleDescriptor
from localfactor.domain.value_objects.run_records import RunRecord


@dataclass
class DensityDTO:
    rule: RuleDescriptor
    d: int
    seed: int
    estimate: Optional[DensityEstimate]
    exact: float
    tree_vertices: int
    # Set when the tree exceeds the vertex cap and only the closed form is reported
    skipped: bool = False


@dataclass
class RunSummaryDTO:
    rule: RuleDescriptor
    n: int
    d: int
    seed: int
    records: list[RunRecord]
    mean_density: float
    variance_over_n: float
    mean_non_tree_fraction: float
    total_ties: int
    exact_tree_density: float
    reference_2logd_over_d: float


# --- Request ---

@dataclass
class EstimateDensityRequest:
    rule: RuleDescriptor
    d: int
    trials: int
    seed: int


@dataclass
class MeasureRunRequest:
    rule: RuleDescriptor
    n: int
    d: int
    trials: int
    seed: int
    count_non_tree: bool = True

