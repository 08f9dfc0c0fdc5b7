"""Measure run use case."""

import math

import numpy as np

from localfactor.application.dto.localalg_dto import MeasureRunRequest, RunSummaryDTO
from localfactor.application.errors.app_errors import ValidationError
from localfactor.application.ports.experiment_log_port import ExperimentLogPort
from localfactor.application.ports.random_stream_port import RandomStreamPort, StreamPurpose
from localfactor.application.ports.trial_executor_port import TrialExecutorPort
from localfactor.domain.services.graph_generation import ConfigurationModelSampler
from localfactor.domain.services.local_rules import build_rule
from localfactor.domain.services.neighborhoods import non_tree_count
from localfactor.domain.services.rule_execution import run_rule
from localfactor.domain.services.tree_density import exact_tree_density
from localfactor.domain.value_objects.decoration import Decoration
from localfactor.domain.value_objects.run_records import RunRecord


class MeasureRunUseCase:
    """Rule output sizes over fresh configuration-model graphs, one per trial."""

    def __init__(
        self,
        streams: RandomStreamPort,
        executor: TrialExecutorPort,
        experiment_log: ExperimentLogPort,
    ) -> None:
        self.streams = streams
        self.executor = executor
        self.experiment_log = experiment_log

    def execute(self, request: MeasureRunRequest) -> RunSummaryDTO:
        if request.trials < 1:
            raise ValidationError(f"trials must be at least 1, got {request.trials}")
        ConfigurationModelSampler.validate(request.n, request.d)
        rule = build_rule(request.rule)

        def run_trial(trial: int) -> RunRecord:
            sample = ConfigurationModelSampler.sample(
                request.n, request.d, self.streams.stream(request.seed, StreamPurpose.GRAPH, trial)
            )
            labels = Decoration.sample(
                request.n, self.streams.stream(request.seed, StreamPurpose.LABELS, trial)
            )
            result = run_rule(rule, sample.graph, labels)
            return RunRecord(
                trial=trial,
                size=result.size,
                ties=result.ties,
                non_tree=(
                    non_tree_count(sample.graph, request.d, rule.radius)
                    if request.count_non_tree
                    else None
                ),
                loops=sample.loop_count,
                multi_edges=sample.multi_edge_count,
            )

        records = self.executor.map(run_trial, list(range(request.trials)))
        sizes = np.array([r.size for r in records], dtype=np.float64)
        variance = float(np.var(sizes, ddof=1)) if sizes.size > 1 else 0.0
        non_tree = [r.non_tree for r in records if r.non_tree is not None]

        dto = RunSummaryDTO(
            rule=request.rule,
            n=request.n,
            d=request.d,
            seed=request.seed,
            records=records,
            mean_density=float(sizes.mean()) / request.n,
            variance_over_n=variance / request.n,
            mean_non_tree_fraction=(
                float(np.mean(non_tree)) / request.n if non_tree else math.nan
            ),
            total_ties=sum(r.ties for r in records),
            exact_tree_density=exact_tree_density(request.rule, request.d),
            reference_2logd_over_d=(
                2.0 * math.log(request.d) / request.d if request.d > 1 else math.nan
            ),
        )
        self.experiment_log.log_event(
            "run.measured",
            {
                "rule": request.rule.format(),
                "n": request.n,
                "d": request.d,
                "trials": request.trials,
                "seed": request.seed,
                "mean_density": dto.mean_density,
                "variance_over_n": dto.variance_over_n,
                "total_ties": dto.total_ties,
            },
        )
        return dto
