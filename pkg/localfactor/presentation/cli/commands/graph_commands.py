"""gen subcommand."""

import argparse

from localfactor.application.dto.graph_dto import GenerateGraphRequest
from localfactor.presentation.cli.commands._common import CommandOutcome, add_common, add_model
from localfactor.presentation.cli.container import Container
from localfactor.presentation.cli.schemas.config_schemas import GenConfig


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("gen", help="sample a random graph and write its edge list")
    add_model(parser)
    parser.add_argument("--n", type=int, required=True)
    parser.add_argument("--d", type=float, required=True)
    parser.add_argument("--require-simple", action="store_true")
    parser.add_argument("--tree-radius", type=int, default=None)
    add_common(parser)
    parser.set_defaults(handler=run_gen, config_cls=GenConfig)


def run_gen(config: GenConfig, container: Container) -> CommandOutcome:
    dto = container.get_generate_graph_use_case().execute(
        GenerateGraphRequest(
            model=config.model,
            n=config.n,
            d=config.d,
            seed=config.seed,
            require_simple=config.require_simple,
            tree_radius=config.tree_radius,
        )
    )
    path = container.get_result_sink().write_edge_list("graph.edges", dto.graph, dto.header)
    return CommandOutcome(
        outputs={
            "edges": dto.edge_count,
            "degree_min": dto.degree_min,
            "degree_max": dto.degree_max,
            "loops": dto.header.loops,
            "multi_edges": dto.header.multi,
            "is_simple": dto.is_simple,
            "attempts": dto.attempts,
            "tree_fraction": dto.tree_fraction,
        },
        output_files=[str(path)],
    )
