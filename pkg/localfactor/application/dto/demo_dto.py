"""Clustering demo DTOs."""

from dataclasses import dataclass
from typing import Optional

from localfactor.domain.value_objects.estimates import GammaCurve
from localfactor.domain.value_objects.rate_point import Window
from localfactor.domain.value_objects.rule_descriptor import RuleDescriptor


@dataclass
class DemoRow:
    p: float
    overlap_density: float
    overlap_std_error: float
    zhat: float
    inside_window: bool
    gamma_hat: Optional[float]
    gamma_std_error: Optional[float]


@dataclass
class ClusteringDemoDTO:
    rule: RuleDescriptor
    d: int
    n: int
    seed: int
    alpha_hat: float
    alpha_std_error: float
    alpha_source: str
    exact_tree_density: float
    beta_hat: float
    window: Optional[Window]
    curve: Optional[GammaCurve]
    tree_sweep_skipped: bool
    rows: list[DemoRow]
    criteria: dict[str, bool]
    notes: list[str]


# --- Request ---

@dataclass
class ClusteringDemoRequest:
    rule: RuleDescriptor
    d: int
    n: int
    p_grid: list[float]
    trials: int
    seed: int
    graph_trials: int = 1
