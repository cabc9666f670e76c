"""Canonical codes for multigraphs.

Two multigraphs get equal codes exactly when they are isomorphic. A connected
graph is encoded as its vertex count followed by the upper triangle (diagonal
included, the diagonal holding loop counts) of its multiplicity matrix under the
vertex order that maximises this byte string. The search is colour refinement
plus individualisation, with pruning by automorphisms found along the way. A
disconnected graph is encoded as the sorted concatenation of its component codes.
"""

import functools
from collections.abc import Sequence
from dataclasses import dataclass, field
try:
    from typing import override
except ImportError:  # Python < 3.12
    from typing_extensions import override

import numpy as np

from graphs.multigraph import Multigraph
from graphs.operations import induced_subgraph, relabel
from graphs.structure import connected_components, cycles_of_length


class CanonicalCode(bytes):
    """Byte string identifying a multigraph up to isomorphism."""

    @override
    def __repr__(self) -> str:
        return f"CanonicalCode({self.hex()})"


@functools.cache
def _upper_triangle(size: int) -> tuple[np.ndarray, np.ndarray]:
    return np.triu_indices(size)


def _matrix(graph: Multigraph) -> np.ndarray:
    matrix = np.zeros((graph.vertex_count, graph.vertex_count), dtype=np.uint8)
    for u, v in graph.edges:
        if u == v:
            matrix[u, u] += 1
        else:
            matrix[u, v] += 1
            matrix[v, u] += 1
    return matrix


def _encode(matrix: np.ndarray, order: Sequence[int]) -> bytes:
    permuted = matrix[np.ix_(order, order)]
    rows, columns = _upper_triangle(len(order))
    return bytes([len(order)]) + permuted[rows, columns].tobytes()


def _rank(signatures: list[tuple]) -> list[int]:
    ranking = {signature: rank for rank, signature in enumerate(sorted(set(signatures)))}
    return [ranking[signature] for signature in signatures]


@dataclass
class _Search:
    graph: Multigraph
    matrix: np.ndarray
    adjacency: list[list[tuple[int, int]]]
    best_code: bytes = b""
    best_order: tuple[int, ...] = ()
    automorphisms: list[tuple[int, ...]] = field(default_factory=list)

    def initial_colours(self) -> list[int]:
        through = {length: [0] * self.graph.vertex_count for length in (3, 4)}
        for length, counts in through.items():
            for cycle in cycles_of_length(self.graph, length):
                for vertex in cycle:
                    counts[vertex] += 1
        return _rank(
            [
                (self.graph.degree(v), self.graph.loops(v), through[3][v], through[4][v])
                for v in self.graph.vertices
            ]
        )

    def refine(self, colours: list[int]) -> list[int]:
        cells = len(set(colours))
        while True:
            refined = _rank(
                [
                    (colours[v], tuple(sorted((colours[u], mult) for u, mult in self.adjacency[v])))
                    for v in self.graph.vertices
                ]
            )
            refined_cells = len(set(refined))
            if refined_cells == cells:
                return refined
            colours, cells = refined, refined_cells

    def in_explored_orbit(self, prefix: list[int], vertex: int, explored: list[int]) -> bool:
        """Whether ``vertex`` is in the orbit of an explored sibling under known stabilisers."""
        if not explored:
            return False
        stabilisers = [
            perm for perm in self.automorphisms if all(perm[p] == p for p in prefix)
        ]
        if not stabilisers:
            return False
        parent = list(self.graph.vertices)

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for perm in stabilisers:
            for x, y in enumerate(perm):
                rx, ry = find(x), find(y)
                if rx != ry:
                    parent[rx] = ry
        root = find(vertex)
        return any(find(other) == root for other in explored)

    def visit(self, colours: list[int], prefix: list[int]) -> None:
        colours = self.refine(colours)
        size = self.graph.vertex_count
        if len(set(colours)) == size:
            order = tuple(sorted(self.graph.vertices, key=colours.__getitem__))
            code = _encode(self.matrix, order)
            if code > self.best_code:
                self.best_code, self.best_order = code, order
            elif code == self.best_code:
                automorphism = [0] * size
                for best_vertex, vertex in zip(self.best_order, order):
                    automorphism[best_vertex] = vertex
                self.automorphisms.append(tuple(automorphism))
            return

        cells: dict[int, list[int]] = {}
        for vertex, colour in enumerate(colours):
            cells.setdefault(colour, []).append(vertex)
        target = min(
            (members for members in cells.values() if len(members) > 1),
            key=lambda members: (len(members), colours[members[0]]),
        )
        explored: list[int] = []
        for vertex in target:
            if self.in_explored_orbit(prefix, vertex, explored):
                continue
            explored.append(vertex)
            individualised = [2 * c + (0 if u == vertex else 1) for u, c in enumerate(colours)]
            self.visit(individualised, [*prefix, vertex])


def _connected_form(graph: Multigraph) -> tuple[bytes, tuple[int, ...]]:
    adjacency: list[list[tuple[int, int]]] = [
        [(u, graph.multiplicity(v, u)) for u in sorted(graph.neighbors(v))]
        for v in graph.vertices
    ]
    search = _Search(graph, _matrix(graph), adjacency)
    search.visit(search.initial_colours(), [])
    return search.best_code, search.best_order


def canonical_form(graph: Multigraph) -> tuple[CanonicalCode, tuple[int, ...]]:
    """Canonical code of ``graph`` and a vertex order realising it.

    The order lists component orders one after another, components sorted by code.
    """
    parts: list[tuple[bytes, tuple[int, ...]]] = []
    for component in connected_components(graph):
        subgraph, original = induced_subgraph(graph, component)
        code, order = _connected_form(subgraph)
        parts.append((code, tuple(original[p] for p in order)))
    parts.sort()
    return (
        CanonicalCode(b"".join(code for code, _ in parts)),
        tuple(vertex for _, order in parts for vertex in order),
    )


def canonical_code(graph: Multigraph) -> CanonicalCode:
    return canonical_form(graph)[0]


def canonical_relabel(graph: Multigraph) -> Multigraph:
    """Isomorphic copy of ``graph`` numbered in canonical order."""
    return relabel(graph, canonical_form(graph)[1])


def is_isomorphic(first: Multigraph, second: Multigraph) -> bool:
    if (first.vertex_count, first.edge_count) != (second.vertex_count, second.edge_count):
        return False
    return canonical_code(first) == canonical_code(second)
