"""Gamma sweep use case."""

from localfactor.application.dto.coupling_dto import GammaSweepRequest
from localfactor.application.ports.experiment_log_port import ExperimentLogPort
from localfactor.application.ports.random_stream_port import RandomStreamPort
from localfactor.application.ports.trial_executor_port import TrialExecutorPort
from localfactor.application.use_cases._monte_carlo import MonteCarloLimits, joint_counts
from localfactor.domain.policies.coupling_policy import CouplingPolicy
from localfactor.domain.services.local_rules import build_rule
from localfactor.domain.value_objects.estimates import GammaCurve, GammaEstimate


class GammaSweepUseCase:
    """gamma over a p grid with x, w and z shared by every grid point."""

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

    def execute(self, request: GammaSweepRequest) -> GammaCurve:
        CouplingPolicy.validate_grid(request.p_grid)
        rule = build_rule(request.rule)
        both = joint_counts(
            self.streams,
            self.executor,
            self.limits,
            rule,
            request.d,
            request.p_grid,
            request.trials,
            request.seed,
        )
        estimates = [
            GammaEstimate.from_counts(p, int(count), request.trials)
            for p, count in zip(request.p_grid, both)
        ]
        curve = GammaCurve(
            grid=tuple(request.p_grid),
            gamma_hat=tuple(e.gamma_hat for e in estimates),
            std_errors=tuple(e.std_error for e in estimates),
            trials=request.trials,
            rule=request.rule,
            d=request.d,
            seed=request.seed,
        )
        violations = curve.lipschitz_violations()
        self.experiment_log.log_event(
            "gamma.swept",
            {
                "rule": request.rule.format(),
                "d": request.d,
                "points": len(curve.grid),
                "trials": request.trials,
                "seed": request.seed,
                "lipschitz_violations": violations,
            },
        )
        return curve
