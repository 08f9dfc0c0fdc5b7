"""Generate graph use case."""

from localfactor.application.dto.graph_dto import GeneratedGraphDTO, GenerateGraphRequest
from localfactor.application.errors.app_errors import ValidationError
from localfactor.application.ports.experiment_log_port import ExperimentLogPort
from localfactor.application.ports.random_stream_port import RandomStreamPort, StreamPurpose
from localfactor.domain.entities.graph import Graph
from localfactor.domain.errors.domain_errors import InvalidGraphError
from localfactor.domain.services.graph_generation import (
    ConfigurationModelSampler,
    ErdosRenyiSampler,
)
from localfactor.domain.services.neighborhoods import tree_fraction
from localfactor.domain.value_objects.edge_list_header import EdgeListHeader
from localfactor.domain.value_objects.overlap_query import GraphModel


class GenerateGraphUseCase:
    """Sample a configuration-model or Erdős–Rényi graph from a seed."""

    def __init__(self, streams: RandomStreamPort, experiment_log: ExperimentLogPort) -> None:
        self.streams = streams
        self.experiment_log = experiment_log

    def execute(self, request: GenerateGraphRequest) -> GeneratedGraphDTO:
        if request.model is GraphModel.ER:
            if request.require_simple:
                raise ValidationError("require_simple applies to the regular model only")
            if request.tree_radius is not None:
                raise ValidationError("tree_radius applies to the regular model only")
            graph = ErdosRenyiSampler.sample(
                request.n, request.d, self.streams.stream(request.seed, StreamPurpose.GRAPH, 0)
            )
            header = EdgeListHeader(
                n=request.n, model=request.model, d=request.d, seed=request.seed
            )
            return self._finish(request, graph, header, is_simple=True, fraction=None, attempts=1)

        if not float(request.d).is_integer():
            raise ValidationError(f"the regular model needs an integer d, got {request.d}")
        d = int(request.d)
        if request.tree_radius is not None and request.tree_radius < 0:
            raise ValidationError(f"tree_radius must be nonnegative, got {request.tree_radius}")

        attempts = 0
        while True:
            # attempt 0 reproduces trial 0 of the per-graph experiments
            rng = self.streams.stream(request.seed, StreamPurpose.GRAPH, attempts)
            sample = ConfigurationModelSampler.sample(request.n, d, rng)
            attempts += 1
            if sample.is_simple or not request.require_simple:
                break
            if attempts >= request.max_attempts:
                raise InvalidGraphError(
                    f"No simple {d}-regular sample on {request.n} vertices "
                    f"in {request.max_attempts} attempts"
                )

        header = EdgeListHeader(
            n=request.n,
            model=request.model,
            d=d,
            seed=request.seed,
            loops=sample.loop_count,
            multi=sample.multi_edge_count,
        )
        fraction = (
            tree_fraction(sample.graph, d, request.tree_radius)
            if request.tree_radius is not None
            else None
        )
        return self._finish(
            request, sample.graph, header, is_simple=sample.is_simple, fraction=fraction,
            attempts=attempts,
        )

    def _finish(
        self,
        request: GenerateGraphRequest,
        graph: Graph,
        header: EdgeListHeader,
        is_simple: bool,
        fraction: float | None,
        attempts: int,
    ) -> GeneratedGraphDTO:
        degrees = graph.degrees()
        dto = GeneratedGraphDTO(
            graph=graph,
            header=header,
            degree_min=int(degrees.min(initial=0)),
            degree_max=int(degrees.max(initial=0)),
            edge_count=graph.edge_count,
            is_simple=is_simple,
            tree_fraction=fraction,
            attempts=attempts,
        )
        self.experiment_log.log_event(
            "graph.generated",
            {
                "model": request.model.value,
                "n": request.n,
                "d": request.d,
                "seed": request.seed,
                "edges": dto.edge_count,
                "loops": header.loops,
                "multi": header.multi,
                "attempts": attempts,
            },
        )
        return dto
