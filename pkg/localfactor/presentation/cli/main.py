"""localfactor command-line entry point."""

import argparse
import logging
import platform
import sys
from collections.abc import Sequence
from pathlib import Path
from typing import Optional

import numpy as np
import scipy

import localfactor
from config.settings import Settings, settings as default_settings
from localfactor.presentation.cli.commands import (
    coupling_commands,
    demo_commands,
    graph_commands,
    localalg_commands,
    moments_commands,
)
from localfactor.presentation.cli.container import Container
from localfactor.presentation.cli.error_handler import EXIT_OK, run_guarded
from localfactor.presentation.cli.schemas.config_schemas import ExperimentConfig
from localfactor.presentation.cli.schemas.report_schemas import Report

logger = logging.getLogger(__name__)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="localfactor",
        description="Local independent-set algorithms, coupled overlaps and forbidden windows",
    )
    parser.add_argument("--version", action="version", version=localfactor.__version__)
    subparsers = parser.add_subparsers(dest="command", required=True)
    for module in (
        graph_commands,
        localalg_commands,
        coupling_commands,
        moments_commands,
        demo_commands,
    ):
        module.register(subparsers)
    return parser


def versions() -> dict[str, str]:
    return {
        "localfactor": localfactor.__version__,
        "numpy": np.__version__,
        "scipy": scipy.__version__,
        "python": platform.python_version(),
    }


def parse_config(args: argparse.Namespace, settings: Settings) -> ExperimentConfig:
    """Validate the parsed flags into the subcommand's config schema."""
    config_cls: type[ExperimentConfig] = args.config_cls
    values = {
        key: value
        for key, value in vars(args).items()
        if key in config_cls.model_fields
    }
    if "p_grid" in config_cls.model_fields and values.get("p_grid") is None:
        values["p_grid"] = list(settings.default_p_grid)
    return config_cls.model_validate(values)


def cli_dispatch(
    argv: Optional[Sequence[str]] = None,
    settings: Optional[Settings] = None,
) -> tuple[int, Optional[Report]]:
    """
    Run one subcommand.

    Returns the exit status and, on success, the report that was written to
    `<command>-report.json` and printed to stdout.
    """
    settings = settings or default_settings
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0), None

    holder: dict[str, Report] = {}

    def command() -> None:
        config = parse_config(args, settings)
        container = Container(
            settings=settings,
            threads=config.threads,
            output_dir=Path(config.output) if config.output else None,
        )
        clock = container.get_clock()
        started_at = clock.now()
        start = clock.monotonic()
        outcome = args.handler(config, container)
        report_name = f"{args.command}-report.json"
        report = Report(
            command=args.command,
            config=config.model_dump(mode="json"),
            versions=versions(),
            started_at=started_at,
            wall_time_seconds=max(clock.monotonic() - start, 0.0),
            outputs=outcome.outputs,
            criteria=outcome.criteria,
            output_files=[*outcome.output_files, str(container.output_dir / report_name)],
        )
        payload = report.model_dump_json(indent=2)
        container.get_result_sink().write_json(report_name, payload)
        print(payload)
        holder["report"] = report

    status = run_guarded(command)
    return status, holder.get("report") if status == EXIT_OK else None


def main() -> int:
    """Console script entry point."""
    logging.basicConfig(
        level=default_settings.log_level,
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        stream=sys.stderr,
    )
    status, _ = cli_dispatch(sys.argv[1:])
    return status


if __name__ == "__main__":
    sys.exit(main())
