"""Solve window use case."""

from localfactor.application.dto.moments_dto import WindowRequest
from localfactor.application.ports.experiment_log_port import ExperimentLogPort
from localfactor.domain.services.window_solver import forbidden_window
from localfactor.domain.value_objects.rate_point import Window


class SolveWindowUseCase:
    """Forbidden window at one degree."""

    def __init__(
        self,
        experiment_log: ExperimentLogPort,
        grid_points: int = 2001,
        theory_tolerance: float = 1e-6,
    ) -> None:
        self.experiment_log = experiment_log
        self.grid_points = grid_points
        self.theory_tolerance = theory_tolerance

    def execute(self, request: WindowRequest) -> Window:
        window = forbidden_window(
            request.d,
            request.beta,
            request.model,
            grid_points=self.grid_points,
            theory_tolerance=self.theory_tolerance,
        )
        self.experiment_log.log_event(
            "window.solved",
            {
                "model": request.model.value,
                "d": request.d,
                "beta": request.beta,
                "zhat_max": window.zhat_max,
                "theoretical_bound": window.theoretical_bound,
                "empty_by_theory": window.empty_by_theory,
                "saturated": window.saturated,
            },
        )
        return window
