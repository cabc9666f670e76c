"""Connectivity, girth, short cycles and block structure of multigraphs."""

import math
from collections import deque
from collections.abc import Iterable
from dataclasses import dataclass
from itertools import combinations

from graphs.multigraph import Multigraph
from graphs.operations import delete_edges, induced_subgraph


def connected_components(graph: Multigraph, removed: Iterable[int] = ()) -> list[list[int]]:
    """Vertex sets of the components of ``graph - removed``, each sorted, ordered by minimum."""
    skip = set(removed)
    seen: set[int] = set(skip)
    components: list[list[int]] = []
    for root in graph.vertices:
        if root in seen:
            continue
        seen.add(root)
        queue = deque([root])
        component = [root]
        while queue:
            vertex = queue.popleft()
            for _, other in graph.incident(vertex):
                if other not in seen:
                    seen.add(other)
                    component.append(other)
                    queue.append(other)
        components.append(sorted(component))
    return components


def is_connected(graph: Multigraph) -> bool:
    return graph.vertex_count > 0 and len(connected_components(graph)) == 1


def girth(graph: Multigraph) -> int | float:
    """Length of a shortest cycle; ``math.inf`` for forests.

    Loops are cycles of length 1 and a pair of parallel edges one of length 2.
    """
    if graph.has_loops():
        return 1
    if not graph.is_simple():
        return 2

    best: int | float = math.inf
    for root in graph.vertices:
        distance = {root: 0}
        parent_edge = {root: -1}
        queue = deque([root])
        while queue:
            vertex = queue.popleft()
            if 2 * distance[vertex] + 1 >= best:
                break
            for edge_id, other in graph.incident(vertex):
                if edge_id == parent_edge[vertex]:
                    continue
                if other not in distance:
                    distance[other] = distance[vertex] + 1
                    parent_edge[other] = edge_id
                    queue.append(other)
                else:
                    best = min(best, distance[vertex] + distance[other] + 1)
    return best


def cycles_of_length(graph: Multigraph, length: int) -> set[frozenset[int]]:
    """Vertex sets of all cycles with exactly ``length`` edges."""
    found: set[frozenset[int]] = set()
    if length == 1:
        return {frozenset([v]) for v in graph.vertices if graph.loops(v)}
    if length == 2:
        return {
            frozenset([u, v])
            for u in graph.vertices
            for v in graph.neighbors(u)
            if u < v and graph.multiplicity(u, v) >= 2
        }

    def extend(path: list[int], on_path: set[int]) -> None:
        last = path[-1]
        if len(path) == length:
            if path[0] in graph.neighbors(last):
                found.add(frozenset(path))
            return
        for other in graph.neighbors(last):
            if other > path[0] and other not in on_path:
                path.append(other)
                on_path.add(other)
                extend(path, on_path)
                _ = path.pop()
                on_path.discard(other)

    for start in graph.vertices:
        extend([start], {start})
    return found


def short_cycles(graph: Multigraph, girth_bound: int) -> list[frozenset[int]]:
    """All cycles of length below ``girth_bound``, as vertex sets.

    Cycles sharing a vertex set are reported once. The list is ordered by cycle
    length and then by sorted vertex tuple.
    """
    cycles: list[frozenset[int]] = []
    for length in range(1, girth_bound):
        cycles.extend(sorted(cycles_of_length(graph, length), key=sorted))
    return cycles


def has_two_disjoint_short_cycles(graph: Multigraph, girth_bound: int) -> bool:
    cycles = short_cycles(graph, girth_bound)
    return any(a.isdisjoint(b) for a, b in combinations(cycles, 2))


@dataclass(frozen=True)
class Block:
    """One block of a multigraph.

    ``graph`` is relabelled to ``0..k-1``; ``vertices[i]`` is the parent id of
    local vertex ``i`` and ``edge_ids`` are the parent edge ids it covers.
    """

    graph: Multigraph
    vertices: tuple[int, ...]
    edge_ids: tuple[int, ...]


@dataclass(frozen=True)
class BlockDecomposition:
    cut_vertices: frozenset[int]
    blocks: tuple[Block, ...]


def _make_block(graph: Multigraph, edge_ids: list[int]) -> Block:
    vertices = sorted({endpoint for edge_id in edge_ids for endpoint in graph.edges[edge_id]})
    position = {vertex: index for index, vertex in enumerate(vertices)}
    ordered = sorted(edge_ids)
    local = [(position[graph.edges[e][0]], position[graph.edges[e][1]]) for e in ordered]
    return Block(Multigraph(len(vertices), local), tuple(vertices), tuple(ordered))


def _biconnected_edge_groups(graph: Multigraph) -> list[list[int]]:
    """Group the non-loop edges into biconnected components (iterative Tarjan)."""
    discovery: dict[int, int] = {}
    low: dict[int, int] = {}
    groups: list[list[int]] = []
    edge_stack: list[int] = []
    counter = 0

    for root in graph.vertices:
        if root in discovery:
            continue
        discovery[root] = low[root] = counter
        counter += 1
        # Frames hold (vertex, id of the tree edge into it, iterator position).
        stack: list[tuple[int, int, int]] = [(root, -1, 0)]
        while stack:
            vertex, via, position = stack[-1]
            incident = graph.incident(vertex)
            if position < len(incident):
                stack[-1] = (vertex, via, position + 1)
                edge_id, other = incident[position]
                if other == vertex or edge_id == via:
                    continue
                if other not in discovery:
                    discovery[other] = low[other] = counter
                    counter += 1
                    edge_stack.append(edge_id)
                    stack.append((other, edge_id, 0))
                elif discovery[other] < discovery[vertex]:
                    edge_stack.append(edge_id)
                    low[vertex] = min(low[vertex], discovery[other])
                continue

            _ = stack.pop()
            if not stack:
                continue
            parent = stack[-1][0]
            low[parent] = min(low[parent], low[vertex])
            if low[vertex] >= discovery[parent]:
                group: list[int] = []
                while True:
                    edge_id = edge_stack.pop()
                    group.append(edge_id)
                    if edge_id == via:
                        break
                groups.append(group)
    return groups


def block_decomposition(graph: Multigraph) -> BlockDecomposition:
    """Blocks and cut vertices of ``graph``.

    Every non-loop edge lies in exactly one biconnected block, each loop forms a
    one-vertex block of its own, and an edgeless vertex is a ``K1`` block. Cut
    vertices are those whose removal increases the number of components.
    """
    blocks: list[Block] = []
    membership = [0] * graph.vertex_count
    for group in _biconnected_edge_groups(graph):
        block = _make_block(graph, group)
        blocks.append(block)
        for vertex in block.vertices:
            membership[vertex] += 1

    for edge_id, (u, v) in enumerate(graph.edges):
        if u == v:
            blocks.append(_make_block(graph, [edge_id]))
    for vertex in graph.vertices:
        if graph.degree(vertex) == 0:
            blocks.append(Block(Multigraph(1), (vertex,), ()))

    cut_vertices = frozenset(v for v in graph.vertices if membership[v] >= 2)
    blocks.sort(key=lambda block: (block.vertices, block.edge_ids))
    return BlockDecomposition(cut_vertices=cut_vertices, blocks=tuple(blocks))


def cut_vertices(graph: Multigraph) -> frozenset[int]:
    return block_decomposition(graph).cut_vertices


def is_block(graph: Multigraph) -> bool:
    """True for connected graphs without cut vertices that form a single block.

    ``K1``, ``K2``, a single loop and multigraphs such as two vertices joined by
    three edges count as blocks.
    """
    return is_connected(graph) and len(block_decomposition(graph).blocks) == 1


def is_2connected(graph: Multigraph) -> bool:
    return graph.vertex_count >= 3 and is_block(graph)


def bridges(graph: Multigraph) -> list[int]:
    """Ids of the edges whose removal disconnects their component."""
    return sorted(
        block.edge_ids[0]
        for block in block_decomposition(graph).blocks
        if len(block.edge_ids) == 1 and len(block.vertices) == 2
    )


def bridgeless_pieces(graph: Multigraph) -> list[tuple[Multigraph, list[int]]]:
    """Components left after deleting every bridge, with their parent vertex ids."""
    remaining = delete_edges(graph, bridges(graph))
    return [induced_subgraph(remaining, part) for part in connected_components(remaining)]


def contains_k4_plus(graph: Multigraph) -> bool:
    """Whether ``graph`` has K4 with one edge subdivided as a subgraph.

    Such a subgraph is an edge ``a-b`` with two common neighbours ``c`` and
    ``d`` that share a further neighbour outside ``{a, b}``.
    """
    for a in graph.vertices:
        for b in graph.neighbors(a):
            if b <= a:
                continue
            common = sorted(graph.neighbors(a) & graph.neighbors(b))
            for c, d in combinations(common, 2):
                if (graph.neighbors(c) & graph.neighbors(d)) - {a, b}:
                    return True
    return False


def degree_counts(graph: Multigraph) -> tuple[int, int, int, int]:
    """Numbers (n0, n1, n2, n3) of vertices of each degree."""
    degrees = graph.degrees()
    return (degrees.count(0), degrees.count(1), degrees.count(2), degrees.count(3))
