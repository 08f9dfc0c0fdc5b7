"""moments, rate, window and mind subcommands."""

import argparse

import numpy as np

from localfactor.application.dto.moments_dto import (
    MinDRequest,
    MomentRequest,
    RateScanRequest,
    WindowRequest,
)
from localfactor.presentation.cli.commands._common import (
    CommandOutcome,
    add_common,
    add_model,
    blank,
)
from localfactor.presentation.cli.container import Container
from localfactor.presentation.cli.schemas.config_schemas import (
    MinDConfig,
    MomentsConfig,
    RateConfig,
    WindowConfig,
)

MOMENT_COLUMNS = ("model", "n", "d", "m", "k", "l", "log_value")
RATE_COLUMNS = ("model", "d", "beta", "zhat", "y_star", "rate")
WINDOW_COLUMNS = ("model", "d", "beta", "zhat_max", "theoretical_bound")
SCHEDULE_COLUMNS = ("step", "d", "zhat_max")


def register(subparsers: argparse._SubParsersAction) -> None:
    moments = subparsers.add_parser("moments", help="exact log first moments of overlap counts")
    add_model(moments)
    moments.add_argument("--n", type=int, required=True)
    moments.add_argument("--d", type=float, required=True)
    moments.add_argument("--m", type=int, required=True)
    moments.add_argument("--k", type=int, default=None, help="default: every feasible k")
    moments.add_argument("--l", type=int, default=None, help="reg only; default: sum over l")
    add_common(moments, seeded=False)
    moments.set_defaults(handler=run_moments, config_cls=MomentsConfig)

    rate = subparsers.add_parser("rate", help="rate function along a zhat grid")
    add_model(rate)
    rate.add_argument("--d", type=float, required=True)
    rate.add_argument("--beta", type=float, required=True)
    rate.add_argument("--zhat-min", type=float, default=-0.99)
    rate.add_argument("--zhat-max", type=float, default=0.99)
    rate.add_argument("--points", type=int, default=199)
    add_common(rate, seeded=False)
    rate.set_defaults(handler=run_rate, config_cls=RateConfig)

    window = subparsers.add_parser("window", help="forbidden overlap window at one degree")
    add_model(window)
    window.add_argument("--beta", type=float, required=True)
    window.add_argument("--d", type=int, default=None, help="default from settings")
    window.add_argument("--grid-points", type=int, default=None)
    add_common(window, seeded=False)
    window.set_defaults(handler=run_window, config_cls=WindowConfig)

    mind = subparsers.add_parser("mind", help="smallest d opening the window to a target")
    add_model(mind)
    mind.add_argument("--beta", type=float, required=True)
    mind.add_argument("--zhat-target", type=float, required=True)
    mind.add_argument(
        "--reject-saturated",
        action="store_true",
        help="do not accept windows that end at the grid edge zhat = beta",
    )
    add_common(mind, seeded=False)
    mind.set_defaults(handler=run_mind, config_cls=MinDConfig)


def run_moments(config: MomentsConfig, container: Container) -> CommandOutcome:
    dto = container.get_evaluate_overlap_moment_use_case().execute(
        MomentRequest(
            model=config.model, n=config.n, d=config.d, m=config.m, k=config.k, l=config.l
        )
    )
    rows = [row.to_csv_row() for row in dto.rows]
    path = container.get_result_sink().write_csv("moments.csv", MOMENT_COLUMNS, rows)
    best = max(dto.rows, key=lambda r: r.log_value) if dto.rows else None
    return CommandOutcome(
        outputs={
            "rows": len(rows),
            "max_log_value": best.log_value if best else None,
            "argmax_k": best.query.k if best else None,
        },
        output_files=[str(path)],
    )


def run_rate(config: RateConfig, container: Container) -> CommandOutcome:
    zhat = np.linspace(config.zhat_min, config.zhat_max, config.points).tolist()
    dto = container.get_scan_rate_use_case().execute(
        RateScanRequest(model=config.model, d=config.d, beta=config.beta, zhat=zhat)
    )
    rows = [
        {
            "model": config.model.value,
            "d": config.d,
            "beta": config.beta,
            "zhat": z,
            "y_star": blank(point.y),
            "rate": point.value,
        }
        for z, point in zip(dto.zhat, dto.points)
    ]
    path = container.get_result_sink().write_csv("rate.csv", RATE_COLUMNS, rows)
    return CommandOutcome(
        outputs={
            "points": len(rows),
            "negative_points": sum(1 for p in dto.points if p.is_negative),
        },
        output_files=[str(path)],
    )


def run_window(config: WindowConfig, container: Container) -> CommandOutcome:
    d = config.d or container.settings.default_window_d
    window = container.get_solve_window_use_case(config.grid_points).execute(
        WindowRequest(model=config.model, d=d, beta=config.beta)
    )
    path = container.get_result_sink().write_csv(
        "window.csv", WINDOW_COLUMNS, [window.to_csv_row()]
    )
    outcome = CommandOutcome(
        outputs={
            "d": d,
            "zhat_max": window.zhat_max,
            "theoretical_bound": window.theoretical_bound,
            "empty_by_theory": window.empty_by_theory,
            "saturated": window.saturated,
            "grid_points": window.grid_points,
        },
        output_files=[str(path)],
    )
    if not window.empty_by_theory and window.zhat_max is not None:
        outcome.criteria["covers_70_percent_of_bound"] = (
            window.zhat_max >= 0.7 * window.theoretical_bound
        )
    return outcome


def run_mind(config: MinDConfig, container: Container) -> CommandOutcome:
    dto = container.get_find_min_d_use_case().execute(
        MinDRequest(
            model=config.model,
            beta=config.beta,
            zhat_target=config.zhat_target,
            accept_saturated=not config.reject_saturated,
        )
    )
    path = container.get_result_sink().write_csv(
        "mind.csv",
        SCHEDULE_COLUMNS,
        [
            {"step": i, "d": d, "zhat_max": blank(zhat_max)}
            for i, (d, zhat_max) in enumerate(dto.schedule)
        ],
    )
    return CommandOutcome(
        outputs={
            "d": dto.d,
            "zhat_max": dto.window.zhat_max,
            "theoretical_bound": dto.window.theoretical_bound,
            "evaluations": len(dto.schedule),
            "nonmonotone_at": dto.nonmonotone,
            "saturated": dto.saturated,
        },
        criteria={
            "window_monotone_along_schedule": not dto.nonmonotone,
            "window_unsaturated": not dto.saturated,
        },
        output_files=[str(path)],
    )
