from collections.abc import Iterable
try:
    from typing import override
except ImportError:  # Python < 3.12
    from typing_extensions import override

from config import Config
from graphs.errors import BadEndpoint, DegreeExceeded

Edge = tuple[int, int]


class Multigraph:
    """Immutable finite multigraph of maximum degree 3.

    Vertices are ``0..vertex_count-1`` and edges carry stable ids (their index
    in ``edges``). Loops and parallel edges are allowed; a loop contributes 2 to
    the degree of its vertex.
    """

    __slots__ = ("vertex_count", "edges", "_incidence")

    vertex_count: int
    edges: tuple[Edge, ...]
    _incidence: tuple[tuple[tuple[int, int], ...], ...]

    def __init__(self, vertex_count: int, edges: Iterable[Edge] = ()):
        if vertex_count < 0:
            raise ValueError(f"Vertex count must be non-negative, got {vertex_count}.")

        incidence: list[list[tuple[int, int]]] = [[] for _ in range(vertex_count)]
        normalised: list[Edge] = []
        for edge_id, (u, v) in enumerate(edges):
            for endpoint in (u, v):
                if not 0 <= endpoint < vertex_count:
                    raise BadEndpoint(endpoint, vertex_count)
            incidence[u].append((edge_id, v))
            incidence[v].append((edge_id, u))
            for endpoint in {u, v}:
                if len(incidence[endpoint]) > Config.MAX_DEGREE:
                    raise DegreeExceeded(endpoint, len(incidence[endpoint]))
            normalised.append((u, v))

        object.__setattr__(self, "vertex_count", vertex_count)
        object.__setattr__(self, "edges", tuple(normalised))
        object.__setattr__(self, "_incidence", tuple(tuple(entries) for entries in incidence))

    @override
    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("Multigraph is immutable.")

    def __reduce__(self):
        return (Multigraph, (self.vertex_count, self.edges))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @property
    def vertices(self) -> range:
        return range(self.vertex_count)

    def degree(self, vertex: int) -> int:
        return len(self._incidence[vertex])

    def incident(self, vertex: int) -> tuple[tuple[int, int], ...]:
        """(edge id, other endpoint) pairs at ``vertex``; a loop is listed twice."""
        return self._incidence[vertex]

    def neighbors(self, vertex: int) -> set[int]:
        """Distinct neighbours of ``vertex`` other than itself."""
        return {other for _, other in self._incidence[vertex] if other != vertex}

    def loops(self, vertex: int) -> int:
        return sum(1 for _, other in self._incidence[vertex] if other == vertex) // 2

    def multiplicity(self, u: int, v: int) -> int:
        """Number of edges joining ``u`` and ``v`` (number of loops when ``u == v``)."""
        if u == v:
            return self.loops(u)
        return sum(1 for _, other in self._incidence[u] if other == v)

    def has_loops(self) -> bool:
        return any(u == v for u, v in self.edges)

    def is_simple(self) -> bool:
        if self.has_loops():
            return False
        seen = {(min(u, v), max(u, v)) for u, v in self.edges}
        return len(seen) == len(self.edges)

    def degrees(self) -> list[int]:
        return [len(entries) for entries in self._incidence]

    @override
    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Multigraph):
            return NotImplemented
        return self.vertex_count == other.vertex_count and self.edges == other.edges

    @override
    def __hash__(self) -> int:
        return hash((self.vertex_count, self.edges))

    @override
    def __repr__(self) -> str:
        return f"Multigraph(vertex_count={self.vertex_count}, edges={list(self.edges)})"


def new_multigraph(vertex_count: int, edges: Iterable[Edge]) -> Multigraph:
    """Build a multigraph, rejecting out-of-range endpoints and degrees above 3."""
    return Multigraph(vertex_count, edges)
