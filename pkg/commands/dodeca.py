"""``dodeca``: the disjoint 5-cycle condition against being a union of dodecahedra."""

import argparse

from opentelemetry import trace

from commands.inputs import add_input_arguments, has_input, load_inputs
from commands.report import Report, emit, exit_status, stopwatch
from enumeration.generator import enumerate_connected_subcubic
from verify.dodecahedron import check_dodeca_theorem

tracer = trace.get_tracer(__name__)


def register(subparsers: argparse._SubParsersAction) -> None:  # pyright: ignore[reportPrivateUsage]
    parser = subparsers.add_parser("dodeca", help="Check the dodecahedron characterisation on cubic graphs.")
    add_input_arguments(parser)
    _ = parser.add_argument(
        "--n-max", type=int, help="Also check every connected cubic graph of girth 5 up to this order."
    )
    parser.set_defaults(func=run)


def run(args: argparse.Namespace) -> int:
    if not has_input(args) and args.n_max is None:
        raise ValueError("dodeca needs --name, --input or --n-max.")

    graphs = [(item.label, item.graph) for item in load_inputs(args)]
    if args.n_max is not None:
        for n in range(4, args.n_max + 1, 2):
            graphs.extend((None, graph) for graph in enumerate_connected_subcubic(n, min_girth=5, cubic=True))

    reports: list[Report] = []
    with tracer.start_as_current_span("cmd_dodeca", attributes={"graphs": len(graphs)}):
        for label, graph in graphs:
            with stopwatch() as watch:
                verdict = check_dodeca_theorem(graph)
            report = Report.from_verdict("dodeca", verdict, watch.elapsed_ms)
            if label is not None:
                report.data["name"] = label
            emit(report)
            reports.append(report)
    return exit_status(reports)
