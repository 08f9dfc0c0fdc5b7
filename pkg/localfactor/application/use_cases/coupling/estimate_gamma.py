"""Estimate gamma use case."""

from localfactor.application.dto.coupling_dto import EstimateGammaRequest
from localfactor.application.ports.experiment_log_port import ExperimentLogPort
from localfactor.application.ports.random_stream_port import RandomStreamPort
from localfactor.application.ports.trial_executor_port import TrialExecutorPort
from localfactor.application.use_cases._monte_carlo import MonteCarloLimits, joint_counts
from localfactor.domain.policies.coupling_policy import CouplingPolicy
from localfactor.domain.services.local_rules import build_rule
from localfactor.domain.value_objects.estimates import GammaEstimate


class EstimateGammaUseCase:
    """gamma(p): both halves of a p-correlated decoration accept the tree root."""

    def __init__(
        self,
        streams: RandomStreamPort,
        executor: TrialExecutorPort,
        experiment_log: ExperimentLogPort,
        limits: MonteCarloLimits,
    ) -> None:
        self.streams = streams
        self.executor = executor
        self.experiment_log = experiment_log
        self.limits = limits

    def execute(self, request: EstimateGammaRequest) -> GammaEstimate:
        CouplingPolicy.validate_probability(request.p)
        rule = build_rule(request.rule)
        both = joint_counts(
            self.streams,
            self.executor,
            self.limits,
            rule,
            request.d,
            [request.p],
            request.trials,
            request.seed,
        )
        estimate = GammaEstimate.from_counts(request.p, int(both[0]), request.trials)
        self.experiment_log.log_event(
            "gamma.estimated",
            {
                "rule": request.rule.format(),
                "d": request.d,
                "p": request.p,
                "trials": request.trials,
                "seed": request.seed,
                "gamma_hat": estimate.gamma_hat,
                "std_error": estimate.std_error,
            },
        )
        return estimate
