"""Find min d use case."""

from localfactor.application.dto.moments_dto import MinDDTO, MinDRequest
from localfactor.application.ports.experiment_log_port import ExperimentLogPort
from localfactor.domain.services.window_solver import forbidden_window, min_d_for_window
from localfactor.domain.value_objects.rate_point import Window


class FindMinDUseCase:
    """Smallest d whose forbidden window reaches a target half-width."""

    def __init__(
        self,
        experiment_log: ExperimentLogPort,
        grid_points: int = 2001,
        theory_tolerance: float = 1e-6,
        d_start: int = 3,
        d_ceiling: int = 2**40,
    ) -> None:
        self.experiment_log = experiment_log
        self.grid_points = grid_points
        self.theory_tolerance = theory_tolerance
        self.d_start = d_start
        self.d_ceiling = d_ceiling

    def execute(self, request: MinDRequest) -> MinDDTO:
        def window_at(d: int) -> Window:
            return forbidden_window(
                d,
                request.beta,
                request.model,
                grid_points=self.grid_points,
                theory_tolerance=self.theory_tolerance,
            )

        def on_nonmonotone(d_before: int, d_after: int) -> None:
            self.experiment_log.log_event(
                "window.nonmonotone",
                {
                    "model": request.model.value,
                    "beta": request.beta,
                    "d": d_before,
                    "next_d": d_after,
                },
            )

        result = min_d_for_window(
            request.beta,
            request.zhat_target,
            request.model,
            window_at,
            d_start=self.d_start,
            d_ceiling=self.d_ceiling,
            theory_tolerance=self.theory_tolerance,
            on_nonmonotone=on_nonmonotone,
            accept_saturated=request.accept_saturated,
        )
        self.experiment_log.log_event(
            "window.min_d",
            {
                "model": request.model.value,
                "beta": request.beta,
                "zhat_target": request.zhat_target,
                "d": result.d,
                "zhat_max": result.window.zhat_max,
                "saturated": result.saturated,
                "evaluations": len(result.schedule),
            },
        )
        return MinDDTO(
            beta=request.beta,
            zhat_target=request.zhat_target,
            model=request.model,
            d=result.d,
            window=result.window,
            schedule=list(result.schedule),
            nonmonotone=list(result.nonmonotone),
            saturated=result.saturated,
        )
