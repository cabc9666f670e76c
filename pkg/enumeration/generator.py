"""Orderly generation of connected simple subcubic graphs.

Graphs on n vertices are grown from those on n - 1 vertices by adding one vertex
joined to one, two or three vertices of degree below 3. A child is kept only if
removing its canonical deletion vertex gives back the parent's class. That vertex
is the non-cut vertex of largest (degree, sorted neighbour degrees) invariant,
ties broken by canonical position. Children are deduplicated per level, so every
isomorphism class appears exactly once.
"""

import logging
from collections.abc import Callable, Iterator
from dataclasses import dataclass
from itertools import combinations

from opentelemetry import trace

import settings
from graphs.canonical import CanonicalCode, canonical_code, canonical_form, canonical_relabel
from graphs.errors import TooLarge
from graphs.multigraph import Multigraph
from graphs.operations import add_vertex, delete_vertices
from graphs.structure import cut_vertices

tracer = trace.get_tracer(__name__)


@dataclass(frozen=True)
class GraphStream:
    """Re-iterable stream of graphs with a description of where they come from."""

    source: str
    factory: Callable[[], Iterator[Multigraph]]

    def __iter__(self) -> Iterator[Multigraph]:
        return self.factory()


def _invariant(graph: Multigraph, vertex: int) -> tuple[int, tuple[int, ...]]:
    return graph.degree(vertex), tuple(sorted(graph.degree(u) for u in graph.neighbors(vertex)))


def _far_enough(graph: Multigraph, attach: tuple[int, ...], min_girth: int) -> bool:
    """Whether joining a new vertex to ``attach`` keeps every cycle at least ``min_girth`` long."""
    limit = min_girth - 2
    for source in attach:
        distance = {source: 0}
        frontier = [source]
        while frontier and distance[frontier[0]] < limit - 1:
            following: list[int] = []
            for vertex in frontier:
                for other in graph.neighbors(vertex):
                    if other not in distance:
                        distance[other] = distance[vertex] + 1
                        following.append(other)
            frontier = following
        if any(other != source and other in distance for other in attach):
            return False
    return True


def _accept(child: Multigraph, parent_code: CanonicalCode) -> bool:
    """Whether deleting the canonical deletion vertex of ``child`` gives the parent class.

    The answer depends only on the isomorphism class of ``child``.
    """
    cut = cut_vertices(child)
    candidates = [v for v in child.vertices if v not in cut]
    best = max(_invariant(child, v) for v in candidates)
    _, order = canonical_form(child)
    position = {vertex: index for index, vertex in enumerate(order)}
    chosen = max((v for v in candidates if _invariant(child, v) == best), key=position.__getitem__)
    if chosen == child.vertex_count - 1:
        return True
    return canonical_code(delete_vertices(child, [chosen])[0]) == parent_code


def _levels(
    top: int, min_girth: int, cubic_at: int | None
) -> Iterator[tuple[int, list[tuple[CanonicalCode, Multigraph]]]]:
    """Yield (n, sorted graphs on n vertices) for n = 1..top."""
    level = [(canonical_code(Multigraph(1)), Multigraph(1))]
    yield 1, level
    for size in range(2, top + 1):
        with tracer.start_as_current_span("enumerate_level", attributes={"vertices": size}):
            children: dict[CanonicalCode, Multigraph] = {}
            for parent_code, parent in level:
                spare = [v for v in parent.vertices if parent.degree(v) < 3]
                seen: set[CanonicalCode] = set()
                for count in (1, 2, 3):
                    for attach in combinations(spare, count):
                        if min_girth > 3 and not _far_enough(parent, attach, min_girth):
                            continue
                        child = add_vertex(parent, attach)
                        if cubic_at is not None:
                            deficiency = sum(3 - d for d in child.degrees())
                            if deficiency > 3 * (cubic_at - size):
                                continue
                        code = canonical_code(child)
                        if code in seen or code in children:
                            continue
                        seen.add(code)
                        if _accept(child, parent_code):
                            children[code] = canonical_relabel(child)
            level = [(code, children[code]) for code in sorted(children)]
        logging.info(f"Enumerated {len(level)} graphs on {size} vertices")
        yield size, level


def _check_cap(n: int, min_girth: int) -> None:
    cap = settings.ENUM_MAX_VERTICES_GIRTH5 if min_girth >= 5 else settings.ENUM_MAX_VERTICES
    if n > cap:
        raise TooLarge(n, cap, "enumeration")


def enumerate_connected_subcubic(n: int, *, min_girth: int = 3, cubic: bool = False) -> GraphStream:
    """Connected simple subcubic graphs on exactly ``n`` vertices, one per isomorphism class.

    Graphs come in ascending canonical-code order, canonically labelled. ``min_girth``
    drops graphs with shorter cycles and ``cubic`` keeps only cubic graphs.

    Raises:
        TooLarge: above the configured enumeration cap.
    """
    _check_cap(n, min_girth)

    def produce() -> Iterator[Multigraph]:
        if n < 1:
            return
        for size, level in _levels(n, min_girth, n if cubic else None):
            if size == n:
                for _, graph in level:
                    if not cubic or all(d == 3 for d in graph.degrees()):
                        yield graph

    return GraphStream(source=f"generated(n={n}, min_girth={min_girth}, cubic={cubic})", factory=produce)


def enumerate_up_to(n_max: int, *, min_girth: int = 3) -> GraphStream:
    """All graphs of ``enumerate_connected_subcubic`` for n = 1..n_max, level by level."""
    _check_cap(n_max, min_girth)

    def produce() -> Iterator[Multigraph]:
        for _, level in _levels(n_max, min_girth, None):
            for _, graph in level:
                yield graph

    return GraphStream(source=f"generated(n_max={n_max}, min_girth={min_girth})", factory=produce)
