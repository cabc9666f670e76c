"""``family``: members of F_{i,j} or F^g_{i,j,k}, and the well-definedness report."""

import argparse

from opentelemetry import trace

from commands.report import Report, emit, exit_status, stopwatch
from enumeration.formats import FORMATS, encode_graph6, encode_medge
from errorfn.well_defined import WellDefinedBudget, check_well_defined
from families.generation import generate_family, generate_family_g
from families.models import FamilyIndex
from graphs.canonical import canonical_code
from graphs.multigraph import Multigraph
from graphs.structure import girth

tracer = trace.get_tracer(__name__)


def register(subparsers: argparse._SubParsersAction) -> None:  # pyright: ignore[reportPrivateUsage]
    parser = subparsers.add_parser("family", help="Generate the members of a family.")
    _ = parser.add_argument("i", type=int, nargs="?", help="Index i (i - j degree-2 vertices).")
    _ = parser.add_argument("j", type=int, nargs="?", help="Index j (number of circle steps).")
    _ = parser.add_argument("--g", type=int, choices=(4, 5), help="Girth parameter of a generalised family.")
    _ = parser.add_argument("--k", type=int, help="Gadget copies of a generalised family; needs --g.")
    _ = parser.add_argument("--girth-min", type=int, default=0, help="Keep members of at least this girth.")
    _ = parser.add_argument("--format", choices=FORMATS, default="medge", help="Encoding of the members.")
    _ = parser.add_argument(
        "--well-defined", action="store_true", help="Report graphs in both a plain and a generalised family."
    )
    _ = parser.add_argument("--max-i", type=int, default=3, help="Largest i for --well-defined.")
    _ = parser.add_argument("--max-k", type=int, default=1, help="Largest k for --well-defined.")
    parser.set_defaults(func=run)


def _encode(graph: Multigraph, fmt: str) -> tuple[str, str]:
    """Encode in ``fmt``, falling back to medge for graphs graph6 cannot carry."""
    if fmt == "graph6" and graph.is_simple():
        return "graph6", encode_graph6(graph)
    return "medge", encode_medge(graph)


def _run_well_defined(args: argparse.Namespace) -> int:
    if args.g is None:
        raise ValueError("family --well-defined needs --g.")
    with stopwatch() as watch:
        report = check_well_defined(args.g, WellDefinedBudget(max_i=args.max_i, max_k=args.max_k))
    reports = [
        Report(
            command="family-well-defined",
            graph=overlap.graph_code.hex(),
            holds=overlap.agrees if overlap.checked else None,
            data=overlap.model_dump(mode="json", exclude={"graph_code"}),
        )
        for overlap in report.overlaps
    ]
    reports.append(
        Report(
            command="family-well-defined-summary",
            holds=not report.violations,
            data={
                "g": args.g,
                "overlaps": len(report.overlaps),
                "violations": len(report.violations),
                "skipped": len(report.skipped),
            },
            elapsed_ms=watch.elapsed_ms,
        )
    )
    for record in reports:
        emit(record)
    return exit_status(reports)


def run(args: argparse.Namespace) -> int:
    if args.well_defined:
        return _run_well_defined(args)
    if args.i is None or args.j is None:
        raise ValueError("family needs the indices i and j.")

    if args.k is None:
        index = FamilyIndex(kind="F", i=args.i, j=args.j)
    else:
        index = FamilyIndex(kind="Fg", i=args.i, j=args.j, g=args.g, k=args.k)

    with tracer.start_as_current_span("cmd_family", attributes={"family": str(index)}), stopwatch() as watch:
        if index.kind == "F":
            members = generate_family(index.i, index.j)
        else:
            members = generate_family_g(args.g, index.i, index.j, args.k)
        kept = [graph for graph in members if girth(graph) >= args.girth_min]

    reports: list[Report] = []
    for graph in kept:
        shortest = girth(graph)
        fmt, text = _encode(graph, args.format)
        size_law = graph.vertex_count == index.vertex_count and graph.edge_count == index.edge_count
        reports.append(
            Report(
                command="family-member",
                graph=canonical_code(graph).hex(),
                holds=size_law,
                data={
                    "family": str(index),
                    "vertices": graph.vertex_count,
                    "edges": graph.edge_count,
                    "girth": shortest if isinstance(shortest, int) else None,
                    "format": fmt,
                    "encoding": text,
                },
            )
        )
    reports.append(
        Report(
            command="family",
            holds=all(report.holds for report in reports),
            data={"family": str(index), "members": len(kept), "generated": len(members)},
            elapsed_ms=watch.elapsed_ms,
        )
    )
    for record in reports:
        emit(record)
    return exit_status(reports)
