"""Graph fixtures for unit tests.

Named graphs come from the catalog; random graphs are seeded so failures are
reproducible.
"""

from collections.abc import Callable, Iterable

import numpy as np
import pytest

from families.catalog import lookup
from graphs.multigraph import Edge, Multigraph
from graphs.operations import relabel


@pytest.fixture
def make_graph() -> Callable[..., Multigraph]:
    def _make_graph(vertex_count: int, edges: Iterable[Edge] = ()) -> Multigraph:
        return Multigraph(vertex_count, edges)

    return _make_graph


@pytest.fixture
def path_graph() -> Callable[[int], Multigraph]:
    def _path_graph(vertex_count: int) -> Multigraph:
        return Multigraph(vertex_count, [(v, v + 1) for v in range(vertex_count - 1)])

    return _path_graph


@pytest.fixture
def k4() -> Multigraph:
    return lookup("K4")


@pytest.fixture
def petersen() -> Multigraph:
    return lookup("petersen")


@pytest.fixture
def cube() -> Multigraph:
    return lookup("Q3")


@pytest.fixture
def dodecahedron() -> Multigraph:
    return lookup("dodecahedron")


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20260)


@pytest.fixture
def shuffled(rng: np.random.Generator) -> Callable[[Multigraph], Multigraph]:
    """Relabel a graph by a random permutation."""

    def _shuffled(graph: Multigraph) -> Multigraph:
        return relabel(graph, rng.permutation(graph.vertex_count).tolist())

    return _shuffled


@pytest.fixture
def random_subcubic(rng: np.random.Generator) -> Callable[[int, float], Multigraph]:
    """Random simple subcubic graph: candidate pairs are tried in random order."""

    def _random_subcubic(vertex_count: int, density: float = 0.7) -> Multigraph:
        pairs = [(u, v) for u in range(vertex_count) for v in range(u + 1, vertex_count)]
        degree = [0] * vertex_count
        edges: list[Edge] = []
        for index in rng.permutation(len(pairs)):
            u, v = pairs[int(index)]
            if degree[u] < 3 and degree[v] < 3 and rng.random() < density:
                edges.append((u, v))
                degree[u] += 1
                degree[v] += 1
        return Multigraph(vertex_count, edges)

    return _random_subcubic
