"""``solve``: exact feedback vertex set of the input graphs."""

import argparse

from opentelemetry import trace

from commands.inputs import add_input_arguments, has_input, load_inputs
from commands.report import Report, emit, exit_status, stopwatch
from fvs.solver import is_fvs, min_fvs, min_fvs_minus_edge, min_fvs_with_required

tracer = trace.get_tracer(__name__)


def register(subparsers: argparse._SubParsersAction) -> None:  # pyright: ignore[reportPrivateUsage]
    parser = subparsers.add_parser("solve", help="Minimum feedback vertex set and largest induced forest.")
    add_input_arguments(parser)
    group = parser.add_mutually_exclusive_group()
    _ = group.add_argument("--required", type=int, nargs="+", default=[], help="Vertices the set must contain.")
    _ = group.add_argument("--minus-edge", type=int, help="Solve on the graph with this edge id deleted.")
    parser.set_defaults(func=run)


def run(args: argparse.Namespace) -> int:
    if not has_input(args):
        raise ValueError("solve needs --name or --input.")

    reports: list[Report] = []
    with tracer.start_as_current_span("cmd_solve"):
        for item in load_inputs(args):
            with stopwatch() as watch:
                if args.minus_edge is not None:
                    certificate = min_fvs_minus_edge(item.graph, args.minus_edge)
                elif args.required:
                    certificate = min_fvs_with_required(item.graph, args.required)
                else:
                    certificate = min_fvs(item.graph)
                checked = args.minus_edge is not None or is_fvs(item.graph, certificate.vertices)
            report = Report(
                command="solve",
                graph=item.label,
                holds=checked,
                data={
                    "phi": certificate.size,
                    "fvs": list(certificate.vertices),
                    "forest_size": item.graph.vertex_count - certificate.size,
                    "nodes_explored": certificate.nodes_explored,
                    "required": args.required,
                    "minus_edge": args.minus_edge,
                },
                elapsed_ms=watch.elapsed_ms,
            )
            emit(report)
            reports.append(report)
    return exit_status(reports)
