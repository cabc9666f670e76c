"""Membership tests for F_{i,j} and the generalised families F^g_{i,j,k}.

Membership in F_{i,j} is decided without generating the family: the index is
forced by the vertex and edge counts, degree-2 vertices are suppressed, and
circle steps are undone on the cubic core until a single loop remains.
"""

import logging
import threading
from itertools import combinations

from config import Config
from families.generation import gadget
from graphs.canonical import CanonicalCode, canonical_code
from graphs.errors import GraphError
from graphs.multigraph import Multigraph
from graphs.operations import delete_edge, delete_edges, delete_vertices, induced_subgraph, suppress_vertex
from graphs.structure import connected_components, is_block, is_connected

# Cubic cores known to be (or not to be) in F_{j,j}, keyed by canonical code.
_cubic_cache: dict[CanonicalCode, bool] = {}
_membership_cache: dict[CanonicalCode, tuple[int, int] | None] = {}
_fg_cache: dict[tuple[CanonicalCode, int], tuple[tuple[int, int, int], ...]] = {}
_lock = threading.Lock()


def forced_index(graph: Multigraph) -> tuple[int, int] | None:
    """The only (i, j) with |V| = i + 3j and |E| = i + 5j, if it is a valid index."""
    excess = graph.edge_count - graph.vertex_count
    if graph.vertex_count == 0 or excess < 0 or excess % 2:
        return None
    j = excess // 2
    i = graph.vertex_count - 3 * j
    if i < 1 or j > i:
        return None
    return i, j


def _suppress_all(graph: Multigraph) -> tuple[Multigraph, int]:
    """Suppress degree-2 vertices until none is left or one vertex remains."""
    suppressed = 0
    while graph.vertex_count > 1:
        vertex = next((v for v in graph.vertices if graph.degree(v) == 2), None)
        if vertex is None:
            break
        graph = suppress_vertex(graph, vertex)
        suppressed += 1
    return graph, suppressed


def _undo_circle_steps(core: Multigraph) -> list[Multigraph]:
    """Graphs K with core = K o (e1, e2, a) for some edges and degree-2 vertex a of K."""
    results: list[Multigraph] = []
    for centre in core.vertices:
        if core.loops(centre):
            continue
        neighbours = sorted(core.neighbors(centre))
        if len(neighbours) != 3:
            continue
        for anchor in neighbours:
            first, second = (v for v in neighbours if v != anchor)
            reduced, kept = delete_vertices(core, [centre])
            position = {vertex: index for index, vertex in enumerate(kept)}
            try:
                reduced = suppress_vertex(reduced, position[first])
                later = position[second]
                if later > position[first]:
                    later -= 1
                reduced = suppress_vertex(reduced, later)
            except GraphError:
                continue
            results.append(reduced)
    return results


def _in_cubic_family(core: Multigraph, j: int) -> bool:
    """Whether the cubic multigraph ``core`` belongs to F_{j,j}."""
    code = canonical_code(core)
    with _lock:
        cached = _cubic_cache.get(code)
    if cached is not None:
        return cached
    result = any(_is_member(reduced, j, j - 1) for reduced in _undo_circle_steps(core))
    with _lock:
        _cubic_cache[code] = result
    return result


def _is_member(graph: Multigraph, i: int, j: int) -> bool:
    if (graph.vertex_count, graph.edge_count) != (i + 3 * j, i + 5 * j):
        return False
    if not is_connected(graph):
        return False
    degrees = graph.degrees()
    if any(d not in (2, 3) for d in degrees) or degrees.count(2) != i - j:
        return False

    core, suppressed = _suppress_all(graph)
    remaining_i = i - suppressed
    if core.vertex_count == 1:
        return (remaining_i, j) == (1, 0) and core.loops(0) == 1
    if remaining_i != j or j < 1:
        return False
    return _in_cubic_family(core, j)


def member_of_F(graph: Multigraph) -> tuple[int, int] | None:
    """The index (i, j) with ``graph`` in F_{i,j}, or None."""
    index = forced_index(graph)
    if index is None:
        return None
    code = canonical_code(graph)
    with _lock:
        if code in _membership_cache:
            return _membership_cache[code]
    result = index if _is_member(graph, *index) else None
    with _lock:
        _membership_cache[code] = result
    logging.debug(f"member_of_F on {graph.vertex_count} vertices: {result}")
    return result


def fg_candidates(graph: Multigraph, g: int) -> list[tuple[int, int, int]]:
    """Indices (i, j, k) with i <= 3 that match the size of ``graph``."""
    piece = gadget(g)
    candidates: list[tuple[int, int, int]] = []
    k = 0
    while k * piece.vertex_count < graph.vertex_count:
        base_vertices = graph.vertex_count - k * piece.vertex_count
        base_edges = graph.edge_count - k * piece.edge_count - (k + 1)
        excess = base_edges - base_vertices
        if excess >= 0 and excess % 2 == 0:
            j = excess // 2
            i = base_vertices - 3 * j
            if 1 <= i <= Config.FG_MAX_I and 0 <= j <= i and i - j >= 2:
                candidates.append((i, j, k))
        k += 1
    return candidates


def _gadget_sides(graph: Multigraph, piece_code: CanonicalCode, piece_size: int) -> list[frozenset[int]]:
    """Vertex sets cut off by two edges that induce a copy of the gadget."""
    sides: set[frozenset[int]] = set()
    links = [e for e, (u, v) in enumerate(graph.edges) if u != v]
    for first, second in combinations(links, 2):
        remaining = delete_edges(graph, [first, second])
        parts = connected_components(remaining)
        if len(parts) != 2:
            continue
        for part in parts:
            if len(part) == piece_size:
                subgraph, _ = induced_subgraph(graph, part)
                if canonical_code(subgraph) == piece_code:
                    sides.add(frozenset(part))
    return sorted(sides, key=sorted)


def _matches(graph: Multigraph, g: int, i: int, j: int, k: int) -> bool:
    if k == 0:
        return any(
            member_of_F(delete_edge(graph, edge_id)) == (i, j) for edge_id in range(graph.edge_count)
        )

    piece = gadget(g)
    sides = _gadget_sides(graph, canonical_code(piece), piece.vertex_count)
    for chosen in combinations(sides, k):
        covered = frozenset().union(*chosen)
        if len(covered) != k * piece.vertex_count:
            continue
        base_vertices = [v for v in graph.vertices if v not in covered]
        owner = {v: index for index, side in enumerate(chosen) for v in side}
        links = sum(1 for u, v in graph.edges if owner.get(u, -1) != owner.get(v, -1))
        if links != k + 1:
            continue
        base, _ = induced_subgraph(graph, base_vertices)
        if member_of_F(base) == (i, j):
            return True
    return False


def fg_indices(graph: Multigraph, g: int) -> tuple[tuple[int, int, int], ...]:
    """Every (i, j, k) with i <= 3 such that ``graph`` is in F^g_{i,j,k}."""
    if not is_block(graph) or graph.vertex_count < 2:
        return ()
    code = canonical_code(graph)
    with _lock:
        cached = _fg_cache.get((code, g))
    if cached is not None:
        return cached
    found = tuple(index for index in fg_candidates(graph, g) if _matches(graph, g, *index))
    with _lock:
        _fg_cache[(code, g)] = found
    return found


def member_of_Fg(graph: Multigraph, g: int) -> tuple[int, int, int] | None:
    """The smallest (i, j, k) (ordered by k, then i) with ``graph`` in F^g_{i,j,k}, or None."""
    found = fg_indices(graph, g)
    if not found:
        return None
    return min(found, key=lambda index: (index[2], index[0], index[1]))
