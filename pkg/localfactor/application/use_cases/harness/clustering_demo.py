"""Clustering demo use case: coupled overlaps against the forbidden window."""

import logging
import math
from typing import Optional

from localfactor.application.dto.coupling_dto import (
    GammaSweepRequest,
    OverlapExperimentRequest,
    OverlapSummaryDTO,
)
from localfactor.application.dto.demo_dto import ClusteringDemoDTO, ClusteringDemoRequest, DemoRow
from localfactor.application.dto.localalg_dto import EstimateDensityRequest
from localfactor.application.errors.app_errors import ValidationError
from localfactor.application.ports.experiment_log_port import ExperimentLogPort
from localfactor.application.use_cases.coupling.gamma_sweep import GammaSweepUseCase
from localfactor.application.use_cases.coupling.overlap_experiment import OverlapExperimentUseCase
from localfactor.application.use_cases.localalg.estimate_density import EstimateDensityUseCase
from localfactor.domain.errors.domain_errors import InvalidDegreeError
from localfactor.domain.policies.coupling_policy import CouplingPolicy
from localfactor.domain.services.window_solver import forbidden_window
from localfactor.domain.value_objects.estimates import GammaCurve
from localfactor.domain.value_objects.overlap_query import GraphModel
from localfactor.domain.value_objects.rate_point import Window

logger = logging.getLogger(__name__)

SIGMAS = 3.0


def implied_beta(alpha: float, d: int) -> float:
    """beta with alpha = (1 + beta) log d / d."""
    return alpha * d / math.log(d) - 1.0


def normalized_overlap(overlap: float, d: int) -> float:
    """zhat with overlap = (1 + zhat) log d / d."""
    return overlap * d / math.log(d) - 1.0


class ClusteringDemoUseCase:
    """
    Overlap densities of coupled rule outputs, checked against the window.

    No overlap of an implementable rule may land inside the forbidden window;
    a row inside it points at a defect in the simulation.
    """

    def __init__(
        self,
        estimate_density: EstimateDensityUseCase,
        gamma_sweep: GammaSweepUseCase,
        overlap_experiment: OverlapExperimentUseCase,
        experiment_log: ExperimentLogPort,
        grid_points: int = 2001,
        theory_tolerance: float = 1e-6,
    ) -> None:
        self.estimate_density = estimate_density
        self.gamma_sweep = gamma_sweep
        self.overlap_experiment = overlap_experiment
        self.experiment_log = experiment_log
        self.grid_points = grid_points
        self.theory_tolerance = theory_tolerance

    def execute(self, request: ClusteringDemoRequest) -> ClusteringDemoDTO:
        CouplingPolicy.validate_grid(request.p_grid)
        if request.d < 3:
            raise ValidationError(f"the demo needs d >= 3, got {request.d}")
        notes: list[str] = []

        density = self.estimate_density.execute(
            EstimateDensityRequest(
                rule=request.rule, d=request.d, trials=request.trials, seed=request.seed
            )
        )
        curve: Optional[GammaCurve] = None
        if density.skipped:
            notes.append(
                f"tree sweep skipped: T has {density.tree_vertices} vertices; "
                "alpha taken from the graph p=1 column"
            )
        else:
            curve = self.gamma_sweep.execute(
                GammaSweepRequest(
                    rule=request.rule,
                    d=request.d,
                    p_grid=request.p_grid,
                    trials=request.trials,
                    seed=request.seed,
                )
            )

        overlaps = {p: self._overlap(request, p) for p in request.p_grid}
        if density.estimate is not None:
            alpha, alpha_se, source = (
                density.estimate.alpha_hat,
                density.estimate.std_error,
                "tree",
            )
        else:
            top = overlaps[1.0] if 1.0 in overlaps else self._overlap(request, 1.0)
            alpha, alpha_se, source = top.mean_overlap_density, top.overlap_std_error, "graph"

        beta = implied_beta(alpha, request.d)
        window = self._window(request.d, beta, notes)

        rows = []
        for p, summary in overlaps.items():
            zhat = normalized_overlap(summary.mean_overlap_density, request.d)
            inside = (
                window is not None
                and window.zhat_max is not None
                and abs(zhat) <= window.zhat_max
            )
            gamma = curve.at(p) if curve is not None else None
            rows.append(
                DemoRow(
                    p=p,
                    overlap_density=summary.mean_overlap_density,
                    overlap_std_error=summary.overlap_std_error,
                    zhat=zhat,
                    inside_window=inside,
                    gamma_hat=gamma.gamma_hat if gamma else None,
                    gamma_std_error=gamma.std_error if gamma else None,
                )
            )

        criteria = {"overlaps_outside_window": not any(r.inside_window for r in rows)}
        if curve is not None:
            criteria["gamma_lipschitz"] = not curve.lipschitz_violations()
        for p, expected, expected_se, name in (
            (0.0, alpha * alpha, 2.0 * alpha * alpha_se, "p0_matches_alpha_squared"),
            (1.0, alpha, alpha_se, "p1_matches_alpha"),
        ):
            if p in overlaps and not (p == 1.0 and source == "graph"):
                criteria[name] = self._consistent(overlaps[p], expected, expected_se)

        dto = ClusteringDemoDTO(
            rule=request.rule,
            d=request.d,
            n=request.n,
            seed=request.seed,
            alpha_hat=alpha,
            alpha_std_error=alpha_se,
            alpha_source=source,
            exact_tree_density=density.exact,
            beta_hat=beta,
            window=window,
            curve=curve,
            tree_sweep_skipped=density.skipped,
            rows=rows,
            criteria=criteria,
            notes=notes,
        )
        for note in notes:
            logger.info(note)
        self.experiment_log.log_event(
            "demo.completed",
            {
                "rule": request.rule.format(),
                "d": request.d,
                "n": request.n,
                "seed": request.seed,
                "alpha_hat": alpha,
                "beta_hat": beta,
                "zhat_max": window.zhat_max if window else None,
                "criteria": criteria,
            },
        )
        return dto

    def _overlap(self, request: ClusteringDemoRequest, p: float) -> OverlapSummaryDTO:
        return self.overlap_experiment.execute(
            OverlapExperimentRequest(
                rule=request.rule,
                n=request.n,
                d=request.d,
                p=p,
                seed=request.seed,
                trials=request.graph_trials,
                count_non_tree=True,
            )
        )

    def _window(self, d: int, beta: float, notes: list[str]) -> Optional[Window]:
        if beta <= 0.0:
            notes.append(
                f"beta_hat={beta:.4g} <= 0: the rule sits far below log d/d, window empty"
            )
            return None
        if beta > 1.0:
            notes.append(f"beta_hat={beta:.4g} > 1: outside the window solver's range")
            return None
        try:
            window = forbidden_window(
                d,
                beta,
                GraphModel.REG,
                grid_points=self.grid_points,
                theory_tolerance=self.theory_tolerance,
            )
        except InvalidDegreeError as e:
            notes.append(str(e))
            return None
        if window.empty_by_theory:
            notes.append(f"beta_hat={beta:.4g} <= 1/sqrt(2): window empty by theory")
        return window

    @staticmethod
    def _consistent(summary: OverlapSummaryDTO, expected: float, expected_se: float) -> bool:
        """Agreement within 3 combined standard errors plus the non-tree defect allowance."""
        allowance = summary.mean_non_tree_fraction or 0.0
        spread = math.hypot(summary.overlap_std_error, expected_se)
        return abs(summary.mean_overlap_density - expected) <= SIGMAS * spread + allowance
