"""demo subcommand."""

import argparse

from localfactor.application.dto.demo_dto import ClusteringDemoRequest
from localfactor.presentation.cli.commands._common import (
    CommandOutcome,
    add_common,
    add_rule,
    blank,
)
from localfactor.presentation.cli.container import Container
from localfactor.presentation.cli.schemas.config_schemas import DemoConfig

DEMO_COLUMNS = (
    "p",
    "overlap_density",
    "overlap_std_error",
    "zhat",
    "inside_window",
    "gamma_hat",
    "gamma_std_error",
)


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser(
        "demo", help="coupled overlaps on graphs checked against the forbidden window"
    )
    add_rule(parser)
    parser.add_argument("--d", type=int, required=True)
    parser.add_argument("--n", type=int, required=True)
    parser.add_argument("--trials", type=int, required=True, help="tree Monte Carlo trials")
    parser.add_argument("--graph-trials", type=int, default=1)
    parser.add_argument("--p-grid", default=None, help="comma-separated, default from settings")
    add_common(parser)
    parser.set_defaults(handler=run_demo, config_cls=DemoConfig)


def run_demo(config: DemoConfig, container: Container) -> CommandOutcome:
    dto = container.get_clustering_demo_use_case().execute(
        ClusteringDemoRequest(
            rule=config.descriptor(),
            d=config.d,
            n=config.n,
            p_grid=config.p_grid,
            trials=config.trials,
            seed=config.seed,
            graph_trials=config.graph_trials,
        )
    )
    sink = container.get_result_sink()
    files = [
        str(
            sink.write_csv(
                "demo.csv",
                DEMO_COLUMNS,
                [
                    {
                        "p": row.p,
                        "overlap_density": row.overlap_density,
                        "overlap_std_error": row.overlap_std_error,
                        "zhat": row.zhat,
                        "inside_window": int(row.inside_window),
                        "gamma_hat": blank(row.gamma_hat),
                        "gamma_std_error": blank(row.gamma_std_error),
                    }
                    for row in dto.rows
                ],
            )
        )
    ]
    window = dto.window
    return CommandOutcome(
        outputs={
            "alpha_hat": dto.alpha_hat,
            "alpha_std_error": dto.alpha_std_error,
            "alpha_source": dto.alpha_source,
            "exact_tree_density": dto.exact_tree_density,
            "beta_hat": dto.beta_hat,
            "window": window.to_csv_row() if window else None,
            "empty_by_theory": window.empty_by_theory if window else None,
            "tree_sweep_skipped": dto.tree_sweep_skipped,
            "notes": dto.notes,
        },
        criteria=dto.criteria,
        output_files=files,
    )
