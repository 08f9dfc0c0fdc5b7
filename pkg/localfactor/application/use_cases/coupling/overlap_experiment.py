"""Overlap experiment use case."""

import math

import numpy as np

from localfactor.application.dto.coupling_dto import OverlapExperimentRequest, OverlapSummaryDTO
from localfactor.application.errors.app_errors import ValidationError
from localfactor.application.ports.experiment_log_port import ExperimentLogPort
from localfactor.application.ports.random_stream_port import RandomStreamPort, StreamPurpose
from localfactor.application.ports.trial_executor_port import TrialExecutorPort
from localfactor.domain.policies.coupling_policy import CouplingPolicy
from localfactor.domain.services.coupling import overlap_trial
from localfactor.domain.services.graph_generation import ConfigurationModelSampler
from localfactor.domain.services.local_rules import build_rule
from localfactor.domain.value_objects.decoration import CoupledDecoration
from localfactor.domain.value_objects.estimates import binomial_std_error
from localfactor.domain.value_objects.run_records import OverlapRecord


class OverlapExperimentUseCase:
    """|I cap J| for the rule run on both halves of a coupled decoration, one graph per trial."""

    def __init__(
        self,
        streams: RandomStreamPort,
        executor: TrialExecutorPort,
        experiment_log: ExperimentLogPort,
    ) -> None:
        self.streams = streams
        self.executor = executor
        self.experiment_log = experiment_log

    def execute(self, request: OverlapExperimentRequest) -> OverlapSummaryDTO:
        if request.trials < 1:
            raise ValidationError(f"trials must be at least 1, got {request.trials}")
        CouplingPolicy.validate_probability(request.p)
        ConfigurationModelSampler.validate(request.n, request.d)
        rule = build_rule(request.rule)

        def run_trial(trial: int) -> OverlapRecord:
            sample = ConfigurationModelSampler.sample(
                request.n, request.d, self.streams.stream(request.seed, StreamPurpose.GRAPH, trial)
            )
            coupled = CoupledDecoration.sample(
                request.n,
                request.p,
                self.streams.stream(request.seed, StreamPurpose.COUPLING, trial),
            )
            return overlap_trial(
                rule, sample, coupled, trial=trial, count_non_tree=request.count_non_tree
            )

        records = self.executor.map(run_trial, list(range(request.trials)))
        overlaps = np.array([r.intersection for r in records], dtype=np.float64) / request.n
        sizes = np.array([r.size_x + r.size_y for r in records], dtype=np.float64) / 2.0
        mean_overlap = float(overlaps.mean())
        # single trial: binomial scale over the n vertices
        std_error = (
            float(np.std(overlaps, ddof=1)) / math.sqrt(overlaps.size)
            if overlaps.size > 1
            else binomial_std_error(mean_overlap, request.n)
        )
        non_tree = [r.non_tree for r in records if r.non_tree is not None]

        dto = OverlapSummaryDTO(
            rule=request.rule,
            n=request.n,
            d=request.d,
            p=request.p,
            seed=request.seed,
            records=records,
            mean_overlap_density=mean_overlap,
            overlap_std_error=std_error,
            mean_density=float(sizes.mean()) / request.n,
            mean_non_tree_fraction=float(np.mean(non_tree)) / request.n if non_tree else None,
        )
        self.experiment_log.log_event(
            "overlap.measured",
            {
                "rule": request.rule.format(),
                "n": request.n,
                "d": request.d,
                "p": request.p,
                "trials": request.trials,
                "seed": request.seed,
                "mean_overlap_density": mean_overlap,
                "overlap_std_error": std_error,
            },
        )
        return dto
