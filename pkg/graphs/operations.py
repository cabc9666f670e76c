"""Structural operations on multigraphs.

Every operation returns a new ``Multigraph``; inputs are never modified. Edge ids
are kept stable where the docstring says so, which lets callers chain operations
(for example subdividing two edges of the same graph one after the other).
"""

from collections.abc import Iterable, Sequence

from graphs.errors import BadEndpoint, LoopAtVertex, NotDegreeTwo, PreconditionViolated
from graphs.multigraph import Edge, Multigraph


def _check_edge(graph: Multigraph, edge_id: int) -> Edge:
    if not 0 <= edge_id < graph.edge_count:
        raise PreconditionViolated(
            f"Edge id {edge_id} does not exist in a graph with {graph.edge_count} edges."
        )
    return graph.edges[edge_id]


def _check_vertex(graph: Multigraph, vertex: int) -> None:
    if not 0 <= vertex < graph.vertex_count:
        raise BadEndpoint(vertex, graph.vertex_count)


def subdivide_edge(graph: Multigraph, edge_id: int) -> Multigraph:
    """Replace edge ``u-v`` by the path ``u-w-v`` through a new vertex ``w``.

    The new vertex gets id ``vertex_count``. Edge ``edge_id`` becomes ``u-w`` and
    the new edge ``w-v`` gets id ``edge_count``; all other ids are unchanged.
    Subdividing a loop yields two parallel edges.
    """
    u, v = _check_edge(graph, edge_id)
    w = graph.vertex_count
    edges = list(graph.edges)
    edges[edge_id] = (u, w)
    edges.append((w, v))
    return Multigraph(graph.vertex_count + 1, edges)


def suppress_vertex(graph: Multigraph, vertex: int) -> Multigraph:
    """Remove a degree-2 vertex and join its two neighbours by a new edge.

    Vertices above ``vertex`` shift down by one. Suppressing a vertex whose two
    edges go to the same neighbour leaves a loop there.
    """
    _check_vertex(graph, vertex)
    degree = graph.degree(vertex)
    if degree != 2:
        raise NotDegreeTwo(vertex, degree)
    if graph.loops(vertex):
        raise LoopAtVertex(vertex)
    if graph.vertex_count < 2:
        raise PreconditionViolated("Cannot suppress the only vertex of a graph.")

    (first_id, x), (second_id, y) = graph.incident(vertex)

    def shift(endpoint: int) -> int:
        return endpoint - 1 if endpoint > vertex else endpoint

    edges: list[Edge] = []
    for edge_id, (a, b) in enumerate(graph.edges):
        if edge_id == first_id:
            edges.append((shift(x), shift(y)))
        elif edge_id != second_id:
            edges.append((shift(a), shift(b)))
    return Multigraph(graph.vertex_count - 1, edges)


def circ_op(graph: Multigraph, first_edge: int, second_edge: int, anchor: int) -> Multigraph:
    """Grow a graph by one "circle" step.

    Subdivide ``first_edge`` by a new vertex ``v1`` and ``second_edge`` by ``v2``
    (when both ids coincide the edge is subdivided twice, giving the path
    ``u-v1-v2-w``), then add a vertex ``v`` adjacent to ``anchor``, ``v1`` and
    ``v2``. ``anchor`` must have degree 2. The result has 3 more vertices and 5
    more edges.
    """
    _check_vertex(graph, anchor)
    if graph.degree(anchor) != 2:
        raise NotDegreeTwo(anchor, graph.degree(anchor))
    _ = _check_edge(graph, first_edge)
    _ = _check_edge(graph, second_edge)

    first_vertex = graph.vertex_count
    grown = subdivide_edge(graph, first_edge)
    if first_edge == second_edge:
        # The new half "v1-w" carries the last edge id.
        grown = subdivide_edge(grown, grown.edge_count - 1)
    else:
        grown = subdivide_edge(grown, second_edge)
    second_vertex = first_vertex + 1
    centre = first_vertex + 2
    return Multigraph(
        centre + 1,
        [*grown.edges, (anchor, centre), (first_vertex, centre), (second_vertex, centre)],
    )


def delete_edge(graph: Multigraph, edge_id: int) -> Multigraph:
    """Remove one edge; vertex ids are unchanged, later edge ids shift down."""
    _ = _check_edge(graph, edge_id)
    return Multigraph(
        graph.vertex_count, [edge for i, edge in enumerate(graph.edges) if i != edge_id]
    )


def delete_edges(graph: Multigraph, edge_ids: Iterable[int]) -> Multigraph:
    dropped = set(edge_ids)
    for edge_id in dropped:
        _ = _check_edge(graph, edge_id)
    return Multigraph(
        graph.vertex_count, [edge for i, edge in enumerate(graph.edges) if i not in dropped]
    )


def induced_subgraph(graph: Multigraph, vertices: Iterable[int]) -> tuple[Multigraph, list[int]]:
    """Subgraph induced by ``vertices``.

    Returns:
        The subgraph, relabelled to ``0..k-1`` in ascending order of the original
        ids, together with the list mapping new ids back to original ones.
    """
    kept = sorted(set(vertices))
    for vertex in kept:
        _check_vertex(graph, vertex)
    position = {vertex: index for index, vertex in enumerate(kept)}
    edges = [
        (position[u], position[v]) for u, v in graph.edges if u in position and v in position
    ]
    return Multigraph(len(kept), edges), kept


def delete_vertices(graph: Multigraph, vertices: Iterable[int]) -> tuple[Multigraph, list[int]]:
    """Remove ``vertices`` with their edges; see ``induced_subgraph`` for the return value."""
    dropped = set(vertices)
    for vertex in dropped:
        _check_vertex(graph, vertex)
    return induced_subgraph(graph, (v for v in graph.vertices if v not in dropped))


def add_edge(graph: Multigraph, u: int, v: int) -> Multigraph:
    """Append edge ``u-v`` with id ``edge_count``."""
    return Multigraph(graph.vertex_count, [*graph.edges, (u, v)])


def add_vertex(graph: Multigraph, neighbours: Iterable[int]) -> Multigraph:
    """Append a vertex joined to each of ``neighbours`` by one edge."""
    new_vertex = graph.vertex_count
    return Multigraph(
        new_vertex + 1, [*graph.edges, *((u, new_vertex) for u in neighbours)]
    )


def disjoint_union(*graphs: Multigraph) -> tuple[Multigraph, list[int]]:
    """Place ``graphs`` side by side.

    Returns:
        The union and the id offset of each input inside it.
    """
    edges: list[Edge] = []
    offsets: list[int] = []
    offset = 0
    for graph in graphs:
        offsets.append(offset)
        edges.extend((u + offset, v + offset) for u, v in graph.edges)
        offset += graph.vertex_count
    return Multigraph(offset, edges), offsets


def relabel(graph: Multigraph, order: Sequence[int]) -> Multigraph:
    """Renumber vertices so that ``order[p]`` becomes ``p``.

    Edges are rewritten as ``(min, max)`` pairs and sorted, so two isomorphic
    graphs relabelled by their canonical orders compare equal.
    """
    if sorted(order) != list(graph.vertices):
        raise PreconditionViolated("Relabelling order must be a permutation of the vertices.")
    position = {vertex: index for index, vertex in enumerate(order)}
    edges = sorted(
        (min(position[u], position[v]), max(position[u], position[v])) for u, v in graph.edges
    )
    return Multigraph(graph.vertex_count, edges)
