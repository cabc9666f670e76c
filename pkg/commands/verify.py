"""``verify``: run the bound checkers over enumerated or supplied graphs."""

import argparse
import functools
import logging
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from opentelemetry import trace

import settings
from commands.inputs import add_input_arguments, has_input, load_inputs
from commands.report import Report, emit, exit_status, stopwatch
from enumeration.generator import enumerate_up_to
from errorfn.classify import classify_r4, classify_r5
from families.catalog import lookup
from graphs.canonical import canonical_code
from graphs.multigraph import Multigraph
from graphs.structure import girth, has_two_disjoint_short_cycles, is_connected
from verify.models import Verdict
from verify.theorems import check_forest_corollary, check_main_bound, check_tightness_ring, classify_explicit

tracer = trace.get_tracer(__name__)


def register(subparsers: argparse._SubParsersAction) -> None:  # pyright: ignore[reportPrivateUsage]
    parser = subparsers.add_parser("verify", help="Check the feedback vertex set bounds on many graphs.")
    _ = parser.add_argument("--n-max", type=int, help="Enumerate connected subcubic graphs up to this order.")
    _ = parser.add_argument("--g", type=int, choices=(4, 5), required=True, help="Girth parameter.")
    add_input_arguments(parser)
    _ = parser.add_argument(
        "--workers", type=int, default=settings.VERIFY_WORKERS, help="Worker processes for the checks."
    )
    _ = parser.add_argument(
        "--tightness", type=int, metavar="COPIES", help="Also check the tightness rings of 1..COPIES gadgets."
    )
    _ = parser.add_argument("--corollary", action="store_true", help="Also check the induced forest bound.")
    _ = parser.add_argument("--r-cases", action="store_true", help="Also classify r_g of each eligible graph.")
    parser.set_defaults(func=run)


@dataclass(frozen=True)
class _Job:
    graph: Multigraph
    g: int
    corollary: bool
    r_cases: bool


@dataclass(frozen=True)
class _Outcome:
    code: bytes
    verdicts: tuple[Verdict, ...]
    skipped: bool
    r_case: str | None = None


def _check(job: _Job) -> _Outcome:
    """Every applicable check on one graph; runs in a worker process."""
    graph, g = job.graph, job.g
    code = canonical_code(graph)
    if has_two_disjoint_short_cycles(graph, g):
        return _Outcome(code=code, verdicts=(), skipped=True)

    verdicts = [check_main_bound(graph, g)]
    r_case = None
    if is_connected(graph):
        if job.r_cases and graph.is_simple():
            classification = classify_r4(graph) if g == 4 else classify_r5(graph)
            r_case = classification.case_id + (classification.subcase or "")
        if girth(graph) >= g:
            verdicts.append(classify_explicit(graph, g))
            if job.corollary and code not in _exceptions(g):
                verdicts.append(check_forest_corollary(graph, g))
    return _Outcome(code=code, verdicts=tuple(verdicts), skipped=False, r_case=r_case)


@functools.cache
def _exceptions(g: int) -> frozenset[bytes]:
    names = ("Q3", "V8") if g == 4 else ("R1", "R2")
    return frozenset(canonical_code(lookup(name)) for name in names)


def _graphs(args: argparse.Namespace) -> list[Multigraph]:
    graphs: list[Multigraph] = []
    if args.n_max is not None:
        graphs.extend(enumerate_up_to(args.n_max))
    if has_input(args):
        graphs.extend(item.graph for item in load_inputs(args))
    if not graphs and args.tightness is None:
        raise ValueError("verify needs --n-max, --name, --input or --tightness.")
    return graphs


def run(args: argparse.Namespace) -> int:
    if args.workers < 1:
        raise ValueError(f"--workers must be positive, got {args.workers}.")

    with tracer.start_as_current_span("cmd_verify", attributes={"g": args.g}), stopwatch() as watch:
        graphs = _graphs(args)
        jobs = [_Job(graph=graph, g=args.g, corollary=args.corollary, r_cases=args.r_cases) for graph in graphs]
        if args.workers == 1:
            outcomes = [_check(job) for job in jobs]
        else:
            with ProcessPoolExecutor(max_workers=args.workers) as pool:
                outcomes = list(pool.map(_check, jobs, chunksize=16))
        tight = [check_tightness_ring(args.g, copies) for copies in range(1, (args.tightness or 0) + 1)]

    verdicts = [verdict for outcome in outcomes for verdict in outcome.verdicts] + tight
    verdicts.sort(key=lambda verdict: (verdict.graph_code, verdict.claim))
    reports = [Report.from_verdict("verify", verdict) for verdict in verdicts]

    cases = Counter(verdict.case for verdict in verdicts if verdict.case is not None)
    r_cases = Counter(outcome.r_case for outcome in outcomes if outcome.r_case is not None)
    violations = sum(1 for verdict in verdicts if not verdict.holds)
    logging.info(f"verify g={args.g}: {len(outcomes)} graphs, {len(verdicts)} verdicts, {violations} violations")
    reports.append(
        Report(
            command="verify-summary",
            holds=violations == 0,
            data={
                "g": args.g,
                "graphs": len(outcomes),
                "skipped": sum(1 for outcome in outcomes if outcome.skipped),
                "verdicts": len(verdicts),
                "violations": violations,
                "cases": dict(sorted(cases.items())),
                "r_cases": dict(sorted(r_cases.items())),
            },
            elapsed_ms=watch.elapsed_ms,
        )
    )
    for record in reports:
        emit(record)
    return exit_status(reports)
