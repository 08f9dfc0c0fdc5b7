"""Find p for gamma use case."""

from localfactor.application.dto.coupling_dto import (
    BisectionDTO,
    EstimateGammaRequest,
    FindPRequest,
)
from localfactor.application.errors.app_errors import ValidationError
from localfactor.application.ports.experiment_log_port import ExperimentLogPort
from localfactor.application.use_cases.coupling.estimate_gamma import EstimateGammaUseCase
from localfactor.domain.errors.domain_errors import ToleranceTooSmallError
from localfactor.domain.policies.coupling_policy import CouplingPolicy
from localfactor.domain.services.coupling import bisect_gamma
from localfactor.domain.value_objects.estimates import GammaEstimate


class FindPForGammaUseCase:
    """
    Bisection on p until gamma_hat(p) is within tol of the target.

    Every evaluation reuses the seed, so successive estimates share their
    random numbers.
    """

    def __init__(
        self,
        estimate_gamma: EstimateGammaUseCase,
        experiment_log: ExperimentLogPort,
        max_iterations: int = 60,
    ) -> None:
        self.estimate_gamma = estimate_gamma
        self.experiment_log = experiment_log
        self.max_iterations = max_iterations

    def execute(self, request: FindPRequest) -> BisectionDTO:
        if request.trials < 1:
            raise ValidationError(f"trials must be at least 1, got {request.trials}")
        try:
            CouplingPolicy.validate_tolerance(request.target, request.tol, request.trials)
        except ToleranceTooSmallError as e:
            raise ValidationError(str(e))

        def estimate(p: float) -> GammaEstimate:
            return self.estimate_gamma.execute(
                EstimateGammaRequest(
                    rule=request.rule,
                    d=request.d,
                    p=p,
                    trials=request.trials,
                    seed=request.seed,
                )
            )

        def on_anomaly(p: float, gamma_hat: float, low: float, high: float) -> None:
            self.experiment_log.log_event(
                "bisection.anomaly",
                {"p": p, "gamma_hat": gamma_hat, "bracket_low": low, "bracket_high": high},
            )

        result = bisect_gamma(
            estimate, request.target, request.tol, self.max_iterations, on_anomaly=on_anomaly
        )
        self.experiment_log.log_event(
            "gamma.bisected",
            {
                "rule": request.rule.format(),
                "d": request.d,
                "target": request.target,
                "tol": request.tol,
                "p": result.p,
                "gamma_hat": result.gamma_hat,
                "iterations": result.iterations,
                "anomalies": list(result.anomalies),
            },
        )
        return BisectionDTO(
            rule=request.rule,
            d=request.d,
            target=request.target,
            tol=request.tol,
            trials=request.trials,
            seed=request.seed,
            result=result,
        )
