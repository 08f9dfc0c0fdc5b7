"""Pieces shared by the subcommand modules."""

import argparse
from dataclasses import dataclass, field
from typing import Any


@dataclass
class CommandOutcome:
    outputs: dict[str, Any] = field(default_factory=dict)
    criteria: dict[str, bool] = field(default_factory=dict)
    output_files: list[str] = field(default_factory=list)


def add_common(parser: argparse.ArgumentParser, seeded: bool = True) -> None:
    """--threads and --output for every subcommand, --seed where randomness is drawn."""
    parser.add_argument(
        "--threads", type=int, default=None, help="worker threads (default: LOCALFACTOR_THREADS)"
    )
    parser.add_argument("--output", default=None, help="output directory")
    if seeded:
        parser.add_argument("--seed", type=int, required=True)


def add_rule(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--rule",
        required=True,
        help="local-min | multi-round-greedy:T=<k> | custom-table:deg<k>=<t>,default=<t> "
        "| rule=<family>;r=<radius>;params=<k=v,...>",
    )


def add_model(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--model", choices=["reg", "er"], required=True)


def blank(value: Any) -> Any:
    """CSV cell for an optional value."""
    return "" if value is None else value
