"""Generation of the families F_{i,j}, the generalised families and tight examples.

F_{1,0} holds the single loop. Every other member is produced from a smaller
member either by subdividing an edge (raising i) or by a circle step (raising j).
Every member of F_{i,j} with i > j is a subdivision of a member of F_{i-1,j}, and
every member of F_{i,i} is a circle step applied to a member of F_{i,i-1}, so by
default only that rule is used for each index. ``both_rules=True`` applies both
rules everywhere.
"""

import functools
import logging
from itertools import combinations_with_replacement, product

from opentelemetry import trace

import settings
from families.catalog import cycle_graph, lookup
from graphs.canonical import CanonicalCode, canonical_code, canonical_relabel
from graphs.errors import OutOfBudget, PreconditionViolated
from graphs.multigraph import Multigraph
from graphs.operations import add_edge, circ_op, disjoint_union, subdivide_edge
from graphs.structure import is_2connected

tracer = trace.get_tracer(__name__)


def _check_budget(vertex_count: int) -> None:
    if vertex_count > settings.FAMILY_MAX_VERTICES:
        raise OutOfBudget(vertex_count, settings.FAMILY_MAX_VERTICES)


def _store(members: dict[CanonicalCode, Multigraph], graph: Multigraph) -> None:
    code = canonical_code(graph)
    if code not in members:
        members[code] = canonical_relabel(graph)


@functools.cache
def _family(i: int, j: int, both_rules: bool) -> tuple[Multigraph, ...]:
    if i < 1 or j < 0 or j > i:
        return ()
    if (i, j) == (1, 0):
        return (cycle_graph(1),)

    members: dict[CanonicalCode, Multigraph] = {}
    if i > j:
        for parent in _family(i - 1, j, both_rules):
            for edge_id in range(parent.edge_count):
                _store(members, subdivide_edge(parent, edge_id))
    if j >= 1 and (both_rules or i == j):
        for parent in _family(i, j - 1, both_rules):
            anchors = [v for v in parent.vertices if parent.degree(v) == 2]
            for first, second in combinations_with_replacement(range(parent.edge_count), 2):
                for anchor in anchors:
                    _store(members, circ_op(parent, first, second, anchor))

    logging.info(f"Generated F_{{{i},{j}}}: {len(members)} members")
    return tuple(members[code] for code in sorted(members))


def generate_family(i: int, j: int, *, both_rules: bool = False) -> list[Multigraph]:
    """All members of F_{i,j}, pairwise non-isomorphic and canonically labelled.

    The list is ordered by canonical code and is empty when the index is invalid.

    Raises:
        OutOfBudget: if members would have more vertices than the configured budget.
    """
    if i >= 1 and 0 <= j <= i:
        _check_budget(i + 3 * j)
    with tracer.start_as_current_span("generate_family", attributes={"i": i, "j": j}):
        return list(_family(i, j, both_rules))


def gadget(g: int) -> Multigraph:
    """The graph attached k times in F^g_{i,j,k}: L for girth 4, R for girth 5."""
    match g:
        case 4:
            return lookup("L")
        case 5:
            return lookup("R")
        case _:
            raise PreconditionViolated(f"Girth parameter must be 4 or 5, got {g}.")


def _spare_vertices(graph: Multigraph) -> list[int]:
    return [v for v in graph.vertices if graph.degree(v) < 3]


def _ring_joins(base: Multigraph, copies: int, g: int) -> list[Multigraph]:
    """All ways of closing ``base`` and ``copies`` gadgets into a ring by k+1 new edges.

    Every gadget spends both of its degree-2 vertices; the base spends two
    distinct vertices of degree below 3.
    """
    ends = gadget_ends(g)
    union, offsets = disjoint_union(base, *([gadget(g)] * copies))
    base_spare = _spare_vertices(base)
    results: list[Multigraph] = []
    for entry, exit_ in ((a, b) for a in base_spare for b in base_spare if a != b):
        for orientations in product((False, True), repeat=copies):
            graph = union
            current = exit_
            for copy_index, flipped in enumerate(orientations):
                offset = offsets[copy_index + 1]
                first, second = (ends[1], ends[0]) if flipped else (ends[0], ends[1])
                graph = add_edge(graph, current, offset + first)
                current = offset + second
            results.append(add_edge(graph, current, entry))
    return results


def generate_family_g(g: int, i: int, j: int, k: int) -> list[Multigraph]:
    """All 2-connected subcubic members of F^g_{i,j,k}, ordered by canonical code.

    For k = 0 a member of F_{i,j} plus one edge; otherwise a member of F_{i,j}
    and k copies of the gadget joined in a ring by k+1 edges. Empty when
    ``i - j < 2``.
    """
    if g not in (4, 5):
        raise PreconditionViolated(f"Girth parameter must be 4 or 5, got {g}.")
    if k < 0 or i < 1 or j < 0 or j > i or i - j < 2:
        return []
    piece = gadget(g)
    _check_budget(i + 3 * j + k * piece.vertex_count)

    members: dict[CanonicalCode, Multigraph] = {}
    with tracer.start_as_current_span("generate_family_g", attributes={"g": g, "i": i, "j": j, "k": k}):
        for base in generate_family(i, j):
            if k == 0:
                spare = _spare_vertices(base)
                candidates = [add_edge(base, a, b) for a in spare for b in spare if a < b]
            else:
                candidates = _ring_joins(base, k, g)
            for candidate in candidates:
                if is_2connected(candidate):
                    _store(members, candidate)
    logging.info(f"Generated F^{g}_{{{i},{j},{k}}}: {len(members)} members")
    return [members[code] for code in sorted(members)]


def gadget_ends(g: int) -> tuple[int, int]:
    """The two degree-2 vertices of ``gadget(g)``, ascending."""
    piece = gadget(g)
    first, second = (v for v in piece.vertices if piece.degree(v) == 2)
    return first, second


def tightness_ring(g: int, copies: int) -> tuple[Multigraph, list[int]]:
    """Ring of ``copies`` gadgets and the first vertex id of each copy.

    Copy c is joined from its second end to the first end of copy c+1 (mod copies).
    """
    if copies < 1:
        raise PreconditionViolated(f"A tightness ring needs at least one copy, got {copies}.")
    entry, exit_ = gadget_ends(g)
    graph, offsets = disjoint_union(*([gadget(g)] * copies))
    for index in range(copies):
        following = offsets[(index + 1) % copies]
        graph = add_edge(graph, offsets[index] + exit_, following + entry)
    return graph, offsets


def tightness_graph(g: int, copies: int) -> Multigraph:
    """Ring of ``copies`` gadgets joined by single edges.

    It has m = 9k edges and a minimum feedback vertex set of size 2k for girth 4
    (m = 15k and 3k for girth 5), so the bound t_g * m is attained.
    """
    return tightness_ring(g, copies)[0]
