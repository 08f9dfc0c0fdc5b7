"""Estimate density use case."""

import logging

from localfactor.application.dto.localalg_dto import DensityDTO, EstimateDensityRequest
from localfactor.application.ports.experiment_log_port import ExperimentLogPort
from localfactor.application.ports.random_stream_port import RandomStreamPort, StreamPurpose
from localfactor.application.ports.trial_executor_port import TrialExecutorPort
from localfactor.application.use_cases._monte_carlo import (
    MonteCarloLimits,
    build_tree,
    plan_blocks,
    tree_fits,
)
from localfactor.domain.entities.canonical_tree import canonical_vertex_count
from localfactor.domain.services.local_rules import build_rule
from localfactor.domain.services.tree_density import count_root_accepts, exact_tree_density
from localfactor.domain.value_objects.estimates import DensityEstimate

logger = logging.getLogger(__name__)


class EstimateDensityUseCase:
    """Monte Carlo root-acceptance probability on T_{d,r+1}."""

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

    def execute(self, request: EstimateDensityRequest) -> DensityDTO:
        rule = build_rule(request.rule)
        exact = exact_tree_density(request.rule, request.d)
        tree_vertices = canonical_vertex_count(request.d, rule.radius + 1)

        if not tree_fits(rule, request.d, self.limits):
            logger.warning(
                f"T_{{{request.d},{rule.radius + 1}}} has {tree_vertices} vertices; "
                "reporting the closed form only"
            )
            dto = DensityDTO(
                rule=request.rule,
                d=request.d,
                seed=request.seed,
                estimate=None,
                exact=exact,
                tree_vertices=tree_vertices,
                skipped=True,
            )
            self._log(dto)
            return dto

        tree = build_tree(rule, request.d)
        plan = plan_blocks(request.trials, tree.n, self.limits)

        def run_block(block: tuple[int, int]) -> int:
            index, rows = block
            rng = self.streams.stream(request.seed, StreamPurpose.TREE, index)
            return count_root_accepts(rule, tree, rng, rows)

        accepted = sum(self.executor.map(run_block, plan))
        dto = DensityDTO(
            rule=request.rule,
            d=request.d,
            seed=request.seed,
            estimate=DensityEstimate.from_counts(accepted, request.trials),
            exact=exact,
            tree_vertices=tree.n,
        )
        self._log(dto)
        return dto

    def _log(self, dto: DensityDTO) -> None:
        self.experiment_log.log_event(
            "density.estimated",
            {
                "rule": dto.rule.format(),
                "d": dto.d,
                "seed": dto.seed,
                "alpha_hat": dto.estimate.alpha_hat if dto.estimate else None,
                "std_error": dto.estimate.std_error if dto.estimate else None,
                "exact": dto.exact,
                "skipped": dto.skipped,
            },
        )
