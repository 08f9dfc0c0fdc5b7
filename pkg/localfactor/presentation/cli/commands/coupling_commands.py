"""gamma, sweep and couple subcommands."""

import argparse

from localfactor.application.dto.coupling_dto import (
    EstimateGammaRequest,
    FindPRequest,
    GammaSweepRequest,
    OverlapExperimentRequest,
)
from localfactor.domain.value_objects.estimates import CURVE_CSV_COLUMNS
from localfactor.presentation.cli.commands._common import (
    CommandOutcome,
    add_common,
    add_rule,
    blank,
)
from localfactor.presentation.cli.container import Container
from localfactor.presentation.cli.schemas.config_schemas import (
    CoupleConfig,
    GammaConfig,
    SweepConfig,
)

BISECTION_COLUMNS = ("target", "tol", "p", "gamma_hat", "std_error", "iterations", "anomalies")
OVERLAP_COLUMNS = (
    "trial",
    "p",
    "intersection",
    "size_x",
    "size_y",
    "overlap_density",
    "ties",
    "non_tree",
    "loops",
    "multi_edges",
)


def register(subparsers: argparse._SubParsersAction) -> None:
    gamma = subparsers.add_parser("gamma", help="gamma(p) on the tree, or the p reaching a target")
    add_rule(gamma)
    gamma.add_argument("--d", type=int, required=True)
    gamma.add_argument("--trials", type=int, required=True)
    gamma.add_argument("--p", type=float, default=None)
    gamma.add_argument("--target", type=float, default=None)
    gamma.add_argument("--tol", type=float, default=None)
    add_common(gamma)
    gamma.set_defaults(handler=run_gamma, config_cls=GammaConfig)

    sweep = subparsers.add_parser("sweep", help="gamma over a p grid with common random numbers")
    add_rule(sweep)
    sweep.add_argument("--d", type=int, required=True)
    sweep.add_argument("--trials", type=int, required=True)
    sweep.add_argument("--p-grid", default=None, help="comma-separated, default from settings")
    add_common(sweep)
    sweep.set_defaults(handler=run_sweep, config_cls=SweepConfig)

    couple = subparsers.add_parser("couple", help="overlap of coupled rule outputs on graphs")
    add_rule(couple)
    couple.add_argument("--n", type=int, required=True)
    couple.add_argument("--d", type=int, required=True)
    couple.add_argument("--p", type=float, required=True)
    couple.add_argument("--trials", type=int, default=1, help="graphs to sample")
    couple.add_argument("--count-non-tree", action="store_true")
    add_common(couple)
    couple.set_defaults(handler=run_couple, config_cls=CoupleConfig)


def run_gamma(config: GammaConfig, container: Container) -> CommandOutcome:
    rule = config.descriptor()
    sink = container.get_result_sink()
    if config.p is not None:
        estimate = container.get_estimate_gamma_use_case().execute(
            EstimateGammaRequest(
                rule=rule, d=config.d, p=config.p, trials=config.trials, seed=config.seed
            )
        )
        row = {
            "p": estimate.p,
            "gamma_hat": estimate.gamma_hat,
            "std_error": estimate.std_error,
            "trials": estimate.trials,
            "rule": rule.format(),
            "d": config.d,
            "r": rule.radius,
            "seed": config.seed,
        }
        path = sink.write_csv("gamma.csv", CURVE_CSV_COLUMNS, [row])
        return CommandOutcome(
            outputs={
                "p": estimate.p,
                "gamma_hat": estimate.gamma_hat,
                "std_error": estimate.std_error,
            },
            output_files=[str(path)],
        )

    assert config.target is not None and config.tol is not None
    dto = container.get_find_p_for_gamma_use_case().execute(
        FindPRequest(
            rule=rule,
            d=config.d,
            target=config.target,
            tol=config.tol,
            trials=config.trials,
            seed=config.seed,
        )
    )
    result = dto.result
    path = sink.write_csv(
        "bisection.csv",
        BISECTION_COLUMNS,
        [
            {
                "target": dto.target,
                "tol": dto.tol,
                "p": result.p,
                "gamma_hat": result.gamma_hat,
                "std_error": result.std_error,
                "iterations": result.iterations,
                "anomalies": ";".join(str(a) for a in result.anomalies),
            }
        ],
    )
    return CommandOutcome(
        outputs={
            "p": result.p,
            "gamma_hat": result.gamma_hat,
            "std_error": result.std_error,
            "iterations": result.iterations,
            "anomalies": list(result.anomalies),
        },
        criteria={"within_tol": abs(result.gamma_hat - dto.target) <= dto.tol},
        output_files=[str(path)],
    )


def run_sweep(config: SweepConfig, container: Container) -> CommandOutcome:
    rule = config.descriptor()
    curve = container.get_gamma_sweep_use_case().execute(
        GammaSweepRequest(
            rule=rule, d=config.d, p_grid=config.p_grid, trials=config.trials, seed=config.seed
        )
    )
    path = container.get_result_sink().write_csv(
        "curve.csv", CURVE_CSV_COLUMNS, curve.to_csv_rows()
    )
    violations = curve.lipschitz_violations()
    return CommandOutcome(
        outputs={
            "points": len(curve.grid),
            "gamma_at_0": curve.gamma_hat[0],
            "gamma_at_end": curve.gamma_hat[-1],
            "lipschitz_violations": [list(v) for v in violations],
        },
        criteria={"lipschitz": not violations},
        output_files=[str(path)],
    )


def run_couple(config: CoupleConfig, container: Container) -> CommandOutcome:
    rule = config.descriptor()
    dto = container.get_overlap_experiment_use_case().execute(
        OverlapExperimentRequest(
            rule=rule,
            n=config.n,
            d=config.d,
            p=config.p,
            seed=config.seed,
            trials=config.trials,
            count_non_tree=config.count_non_tree,
        )
    )
    path = container.get_result_sink().write_csv(
        "overlap.csv",
        OVERLAP_COLUMNS,
        [
            {
                "trial": r.trial,
                "p": config.p,
                "intersection": r.intersection,
                "size_x": r.size_x,
                "size_y": r.size_y,
                "overlap_density": r.intersection / config.n,
                "ties": r.ties,
                "non_tree": blank(r.non_tree),
                "loops": r.loops,
                "multi_edges": r.multi_edges,
            }
            for r in dto.records
        ],
    )
    return CommandOutcome(
        outputs={
            "mean_overlap_density": dto.mean_overlap_density,
            "overlap_std_error": dto.overlap_std_error,
            "mean_density": dto.mean_density,
            "mean_non_tree_fraction": dto.mean_non_tree_fraction,
        },
        output_files=[str(path)],
    )
