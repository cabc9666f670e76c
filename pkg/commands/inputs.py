"""Graph inputs shared by the sub-commands: catalog names or graph files."""

import argparse
from dataclasses import dataclass

from enumeration.formats import FORMATS, read_graphs
from families.catalog import named
from graphs.canonical import canonical_code
from graphs.multigraph import Multigraph


@dataclass(frozen=True)
class LabelledGraph:
    label: str
    graph: Multigraph


def add_input_arguments(parser: argparse.ArgumentParser) -> None:
    group = parser.add_argument_group("input")
    _ = group.add_argument("--name", action="append", default=[], help="Catalog name, e.g. petersen or C5; repeatable.")
    _ = group.add_argument("--input", help="Path of a graph file.")
    _ = group.add_argument("--input-format", choices=FORMATS, default="medge", help="Format of --input.")


def has_input(args: argparse.Namespace) -> bool:
    return bool(args.name) or args.input is not None


def load_inputs(args: argparse.Namespace) -> list[LabelledGraph]:
    """Graphs selected by ``--name`` and ``--input``, names first, in command-line order.

    Raises:
        UnknownName: for a name missing from the catalog.
        ParseError: for a malformed input file.
    """
    graphs = [LabelledGraph(label=entry.name, graph=entry.graph) for entry in map(named, args.name)]
    if args.input is not None:
        graphs.extend(
            LabelledGraph(label=canonical_code(graph).hex(), graph=graph)
            for graph in read_graphs(args.input, args.input_format)
        )
    return graphs
