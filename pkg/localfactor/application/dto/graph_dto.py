"""Graph generation DTOs."""

from dataclasses import dataclass
from typing import Optional

from localfactor.domain.entities.graph import Graph
from localfactor.domain.value_objects.edge_list_header import EdgeListHeader
from localfactor.domain.value_objects.overlap_query import GraphModel


@dataclass
class GeneratedGraphDTO:
    graph: Graph
    header: EdgeListHeader
    degree_min: int
    degree_max: int
    edge_count: int
    is_simple: bool
    tree_fraction: Optional[float]
    attempts: int


# --- Request ---

@dataclass
class GenerateGraphRequest:
    model: GraphModel
    n: int
    d: float
    seed: int
    # Redraw until the configuration model yields a simple graph
    require_simple: bool = False
    max_attempts: int = 1000
    # Radius for the tree-likeness measurement, None to skip it
    tree_radius: Optional[int] = None
