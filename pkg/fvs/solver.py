"""Exact minimum feedback vertex sets for small subcubic multigraphs.

The search branches on a shortest cycle of the residual graph: the i-th branch
deletes the i-th cycle vertex and keeps the earlier ones. Vertices of degree at
most one are pruned before every step. Two lower bounds cut the search: half the
cycle rank (one deletion lowers ``m - n + c`` by at most two when degrees are at
most three) and a greedy packing of vertex-disjoint cycles.

Once the optimum is known, a second search walks the vertices in ascending order
(include before exclude) to return the lexicographically least optimal set.
"""

import logging
import math
from collections import deque
from collections.abc import Iterable

from opentelemetry import trace

import settings
from fvs.models import FvsCertificate
from graphs.errors import BadEndpoint, TooLarge
from graphs.multigraph import Multigraph
from graphs.operations import delete_edge, induced_subgraph
from graphs.structure import block_decomposition

tracer = trace.get_tracer(__name__)


def is_fvs(graph: Multigraph, vertices: Iterable[int]) -> bool:
    """True iff ``graph`` minus ``vertices`` has no cycle (loops and parallel pairs count)."""
    removed = set(vertices)
    parent = list(graph.vertices)

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in graph.edges:
        if u in removed or v in removed:
            continue
        ru, rv = find(u), find(v)
        if ru == rv:
            return False
        parent[ru] = rv
    return True


def is_forest(graph: Multigraph) -> bool:
    return is_fvs(graph, ())


def certify(graph: Multigraph, vertices: Iterable[int], nodes_explored: int = 0) -> FvsCertificate:
    chosen = tuple(sorted(set(vertices)))
    if not is_fvs(graph, chosen):
        raise RuntimeError(f"Vertices {list(chosen)} do not meet every cycle of the graph.")
    return FvsCertificate(vertices=chosen, nodes_explored=nodes_explored)


class _Search:
    def __init__(self, graph: Multigraph):
        self.graph = graph
        self.nodes = 0
        self.best: int = graph.vertex_count + 1

    def degree(self, vertex: int, alive: set[int]) -> int:
        return sum(1 for _, other in self.graph.incident(vertex) if other in alive)

    def prune(self, alive: set[int]) -> set[int]:
        """Drop vertices of residual degree at most one, repeatedly."""
        alive = set(alive)
        queue = deque(v for v in alive if self.degree(v, alive) <= 1)
        while queue:
            vertex = queue.popleft()
            if vertex not in alive:
                continue
            alive.discard(vertex)
            for _, other in self.graph.incident(vertex):
                if other in alive and self.degree(other, alive) <= 1:
                    queue.append(other)
        return alive

    def cycle_rank(self, alive: set[int]) -> int:
        edges = sum(1 for u, v in self.graph.edges if u in alive and v in alive)
        seen: set[int] = set()
        components = 0
        for root in alive:
            if root in seen:
                continue
            components += 1
            seen.add(root)
            stack = [root]
            while stack:
                vertex = stack.pop()
                for _, other in self.graph.incident(vertex):
                    if other in alive and other not in seen:
                        seen.add(other)
                        stack.append(other)
        return edges - len(alive) + components

    def shortest_cycle(self, alive: set[int]) -> list[int] | None:
        ordered = sorted(alive)
        for vertex in ordered:
            if self.graph.loops(vertex):
                return [vertex]
        for vertex in ordered:
            for other in sorted(self.graph.neighbors(vertex) & alive):
                if other > vertex and self.graph.multiplicity(vertex, other) >= 2:
                    return [vertex, other]

        best: tuple[int, int, int, int] | None = None
        best_parents: dict[int, int] = {}
        for root in ordered:
            distance = {root: 0}
            parent = {root: root}
            queue = deque([root])
            while queue:
                vertex = queue.popleft()
                if best is not None and 2 * distance[vertex] + 1 >= best[0]:
                    break
                for other in sorted(self.graph.neighbors(vertex) & alive):
                    if other == parent[vertex]:
                        continue
                    if other not in distance:
                        distance[other] = distance[vertex] + 1
                        parent[other] = vertex
                        queue.append(other)
                    else:
                        length = distance[vertex] + distance[other] + 1
                        if best is None or length < best[0]:
                            best = (length, root, vertex, other)
                            best_parents = dict(parent)
        if best is None:
            return None

        _, root, left, right = best
        left_path = [left]
        while left_path[-1] != root:
            left_path.append(best_parents[left_path[-1]])
        right_path = [right]
        while right_path[-1] != root:
            right_path.append(best_parents[right_path[-1]])
        return left_path + right_path[-2::-1]

    def lower_bound(self, alive: set[int]) -> int:
        packed = 0
        rest = set(alive)
        while True:
            rest = self.prune(rest)
            cycle = self.shortest_cycle(rest)
            if cycle is None:
                break
            packed += 1
            rest -= set(cycle)
        return max(packed, math.ceil(self.cycle_rank(alive) / 2))

    def cyclic_vertices(self, alive: set[int]) -> set[int]:
        """Vertices lying on at least one cycle of the residual graph."""
        subgraph, kept = induced_subgraph(self.graph, alive)
        found: set[int] = set()
        for block in block_decomposition(subgraph).blocks:
            if len(block.edge_ids) >= len(block.vertices):
                found.update(kept[v] for v in block.vertices)
        return found

    def greedy(self, alive: set[int]) -> int:
        chosen = 0
        alive = self.prune(alive)
        while (cycle := self.shortest_cycle(alive)) is not None:
            vertex = max(cycle, key=lambda v: (self.degree(v, alive), -v))
            alive = self.prune(alive - {vertex})
            chosen += 1
        return chosen

    def branch(self, alive: set[int], forbidden: frozenset[int], depth: int) -> None:
        self.nodes += 1
        alive = self.prune(alive)
        cycle = self.shortest_cycle(alive)
        if cycle is None:
            self.best = min(self.best, depth)
            return
        if depth + self.lower_bound(alive) >= self.best:
            return
        kept: set[int] = set(forbidden)
        for vertex in cycle:
            if vertex not in kept:
                self.branch(alive - {vertex}, frozenset(kept), depth + 1)
            kept.add(vertex)

    def least(self, alive: set[int], floor: int, chosen: list[int], budget: int) -> list[int] | None:
        """Lexicographically least FVS of the residual graph of size at most ``budget``.

        Vertices below ``floor`` are already decided and may not be deleted.
        """
        self.nodes += 1
        alive = self.prune(alive)
        if self.cycle_rank(alive) == 0:
            return chosen
        if budget == 0 or self.lower_bound(alive) > budget:
            return None
        if self.cycle_rank(self.prune({v for v in alive if v < floor})) > 0:
            return None
        candidates = sorted(v for v in self.cyclic_vertices(alive) if v >= floor)
        if not candidates:
            return None
        vertex = candidates[0]
        found = self.least(alive - {vertex}, vertex + 1, [*chosen, vertex], budget - 1)
        if found is not None:
            return found
        return self.least(alive, vertex + 1, chosen, budget)


def _check_size(graph: Multigraph) -> None:
    if graph.vertex_count > settings.FVS_MAX_VERTICES:
        raise TooLarge(graph.vertex_count, settings.FVS_MAX_VERTICES)


def _solve(graph: Multigraph, required: frozenset[int]) -> FvsCertificate:
    _check_size(graph)
    for vertex in required:
        if not 0 <= vertex < graph.vertex_count:
            raise BadEndpoint(vertex, graph.vertex_count)

    search = _Search(graph)
    alive = set(graph.vertices) - required
    with tracer.start_as_current_span(
        "min_fvs", attributes={"vertices": graph.vertex_count, "required": len(required)}
    ) as span:
        search.best = search.greedy(alive)
        search.branch(alive, frozenset(), 0)
        optimum = search.best
        rest = search.least(alive, 0, [], optimum)
        if rest is None or len(rest) != optimum:
            raise RuntimeError(f"Lexicographic search lost the optimum {optimum}.")
        span.set_attribute("size", optimum + len(required))
        span.set_attribute("nodes_explored", search.nodes)

    logging.debug(
        f"FVS of size {optimum + len(required)} found on {graph.vertex_count} vertices "
        f"after {search.nodes} nodes"
    )
    return certify(graph, required | set(rest), search.nodes)


def min_fvs(graph: Multigraph) -> FvsCertificate:
    """Minimum feedback vertex set; ties go to the lexicographically least set.

    Raises:
        TooLarge: above ``GRAPHS_FVS_MAX_VERTICES`` vertices.
    """
    return _solve(graph, frozenset())


def min_fvs_with_required(graph: Multigraph, required: Iterable[int]) -> FvsCertificate:
    """Minimum feedback vertex set among those containing every vertex of ``required``."""
    return _solve(graph, frozenset(required))


def min_fvs_minus_edge(graph: Multigraph, edge_id: int) -> FvsCertificate:
    """Minimum feedback vertex set of ``graph`` with one edge deleted (vertex ids unchanged)."""
    return _solve(delete_edge(graph, edge_id), frozenset())


def max_induced_forest(graph: Multigraph) -> tuple[int, ...]:
    """Vertices of a largest induced forest: the complement of ``min_fvs``."""
    removed = set(min_fvs(graph).vertices)
    forest = tuple(v for v in graph.vertices if v not in removed)
    if not is_fvs(graph, removed):
        raise RuntimeError("Complement of the feedback vertex set is not a forest.")
    return forest


def phi(graph: Multigraph) -> int:
    return min_fvs(graph).size


def lower_bound(graph: Multigraph) -> int:
    """The bound the search prunes with: max of half the cycle rank and a greedy cycle packing."""
    return _Search(graph).lower_bound(set(graph.vertices))
