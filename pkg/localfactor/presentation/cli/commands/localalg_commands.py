"""density subcommand: tree estimate, closed form and optional graph runs."""

import argparse

from localfactor.application.dto.localalg_dto import EstimateDensityRequest, MeasureRunRequest
from localfactor.presentation.cli.commands._common import (
    CommandOutcome,
    add_common,
    add_rule,
    blank,
)
from localfactor.presentation.cli.container import Container
from localfactor.presentation.cli.schemas.config_schemas import DensityConfig

DENSITY_COLUMNS = ("rule", "d", "r", "trials", "seed", "alpha_hat", "std_error", "exact")
RUN_COLUMNS = ("trial", "n", "d", "size", "density", "ties", "non_tree", "loops", "multi_edges")


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("density", help="root-acceptance probability of a rule")
    add_rule(parser)
    parser.add_argument("--d", type=int, required=True)
    parser.add_argument("--trials", type=int, required=True)
    parser.add_argument("--n", type=int, default=None, help="also run on n-vertex d-regular graphs")
    parser.add_argument("--graph-trials", type=int, default=1)
    add_common(parser)
    parser.set_defaults(handler=run_density, config_cls=DensityConfig)


def run_density(config: DensityConfig, container: Container) -> CommandOutcome:
    rule = config.descriptor()
    sink = container.get_result_sink()
    dto = container.get_estimate_density_use_case().execute(
        EstimateDensityRequest(rule=rule, d=config.d, trials=config.trials, seed=config.seed)
    )
    estimate = dto.estimate
    path = sink.write_csv(
        "density.csv",
        DENSITY_COLUMNS,
        [
            {
                "rule": rule.format(),
                "d": config.d,
                "r": rule.radius,
                "trials": config.trials,
                "seed": config.seed,
                "alpha_hat": blank(estimate.alpha_hat if estimate else None),
                "std_error": blank(estimate.std_error if estimate else None),
                "exact": dto.exact,
            }
        ],
    )
    outcome = CommandOutcome(
        outputs={
            "alpha_hat": estimate.alpha_hat if estimate else None,
            "std_error": estimate.std_error if estimate else None,
            "exact": dto.exact,
            "tree_vertices": dto.tree_vertices,
            "skipped": dto.skipped,
        },
        output_files=[str(path)],
    )
    if estimate is not None:
        outcome.criteria["within_3_std_errors_of_exact"] = (
            abs(estimate.alpha_hat - dto.exact) <= 3.0 * estimate.std_error
        )

    if config.n is not None:
        runs = container.get_measure_run_use_case().execute(
            MeasureRunRequest(
                rule=rule,
                n=config.n,
                d=config.d,
                trials=config.graph_trials,
                seed=config.seed,
            )
        )
        run_path = sink.write_csv(
            "runs.csv",
            RUN_COLUMNS,
            [
                {
                    "trial": r.trial,
                    "n": config.n,
                    "d": config.d,
                    "size": r.size,
                    "density": r.size / config.n,
                    "ties": r.ties,
                    "non_tree": blank(r.non_tree),
                    "loops": r.loops,
                    "multi_edges": r.multi_edges,
                }
                for r in runs.records
            ],
        )
        outcome.outputs["graph_runs"] = {
            "mean_density": runs.mean_density,
            "variance_over_n": runs.variance_over_n,
            "mean_non_tree_fraction": runs.mean_non_tree_fraction,
            "total_ties": runs.total_ties,
            "reference_2logd_over_d": runs.reference_2logd_over_d,
        }
        outcome.output_files.append(str(run_path))
    return outcome
