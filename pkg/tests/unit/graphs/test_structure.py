import math

import networkx as nx
import pytest

from families.catalog import cycle_graph, lookup
from graphs.multigraph import Multigraph
from graphs.structure import (
    block_decomposition,
    bridgeless_pieces,
    bridges,
    connected_components,
    contains_k4_plus,
    cut_vertices,
    cycles_of_length,
    girth,
    has_two_disjoint_short_cycles,
    is_2connected,
    is_block,
    is_connected,
    short_cycles,
)
from tests.unit.shared.oracles import to_nx_multigraph

# Two triangles joined by the edge 2-3.
BARBELL = Multigraph(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (2, 3)])


@pytest.mark.parametrize(
    "name, expected",
    [
        ("K4", 3),
        ("petersen", 5),
        ("Q3", 4),
        ("dodecahedron", 5),
        ("C1", 1),
        ("theta", 2),
        ("L", 4),
        ("R", 5),
    ],
)
def test_girth_of_named_graphs(name, expected):  # pyright: ignore[reportMissingParameterType]
    assert girth(lookup(name)) == expected


def test_girth_of_forest(path_graph):  # pyright: ignore[reportMissingParameterType]
    assert girth(path_graph(5)) == math.inf


def test_girth_matches_networkx(random_subcubic):  # pyright: ignore[reportMissingParameterType]
    for _ in range(30):
        graph = random_subcubic(9)
        expected = nx.girth(nx.Graph(graph.edges)) if graph.edge_count else math.inf
        assert girth(graph) == expected


def test_triangles_of_k4(k4):  # pyright: ignore[reportMissingParameterType]
    assert cycles_of_length(k4, 3) == {frozenset(c) for c in ([0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3])}


def test_short_cycles(petersen, cube):  # pyright: ignore[reportMissingParameterType]
    assert short_cycles(petersen, 5) == []
    faces = short_cycles(cube, 5)
    assert len(faces) == 6
    assert all(len(face) == 4 for face in faces)


def test_five_cycles_of_petersen(petersen):  # pyright: ignore[reportMissingParameterType]
    assert len(cycles_of_length(petersen, 5)) == 12


def test_short_cycles_of_multigraphs():
    graph = Multigraph(3, [(0, 0), (1, 2), (1, 2)])
    assert short_cycles(graph, 3) == [frozenset([0]), frozenset([1, 2])]


@pytest.mark.parametrize(
    "name, bound, expected",
    [
        ("Q3", 5, True),
        ("petersen", 5, False),
        ("K4", 4, False),
        ("V8", 5, True),
    ],
)
def test_two_disjoint_short_cycles(name, bound, expected):  # pyright: ignore[reportMissingParameterType]
    assert has_two_disjoint_short_cycles(lookup(name), bound) is expected


def test_barbell_has_two_disjoint_triangles():
    assert has_two_disjoint_short_cycles(BARBELL, 4)


def test_blocks_of_path(path_graph):  # pyright: ignore[reportMissingParameterType]
    decomposition = block_decomposition(path_graph(3))
    assert decomposition.cut_vertices == frozenset([1])
    assert [block.vertices for block in decomposition.blocks] == [(0, 1), (1, 2)]


def test_blocks_of_k4(k4):  # pyright: ignore[reportMissingParameterType]
    decomposition = block_decomposition(k4)
    assert decomposition.cut_vertices == frozenset()
    assert len(decomposition.blocks) == 1
    assert decomposition.blocks[0].graph == k4


def test_blocks_of_barbell():
    decomposition = block_decomposition(BARBELL)
    assert decomposition.cut_vertices == frozenset([2, 3])
    assert sorted(len(block.vertices) for block in decomposition.blocks) == [2, 3, 3]


def test_blocks_match_networkx(random_subcubic):  # pyright: ignore[reportMissingParameterType]
    for _ in range(30):
        graph = random_subcubic(10)
        simple = nx.Graph()
        simple.add_nodes_from(graph.vertices)
        simple.add_edges_from(graph.edges)
        expected = sorted(tuple(sorted(c)) for c in nx.biconnected_components(simple))
        found = sorted(block.vertices for block in block_decomposition(graph).blocks if len(block.vertices) > 1)
        assert found == expected
        assert cut_vertices(graph) == frozenset(nx.articulation_points(simple))


def test_loops_and_isolated_vertices_form_blocks():
    graph = Multigraph(3, [(0, 0), (0, 1)])
    decomposition = block_decomposition(graph)
    assert len(decomposition.blocks) == 3
    assert decomposition.cut_vertices == frozenset()


@pytest.mark.parametrize(
    "graph, expected",
    [
        (Multigraph(1), True),
        (Multigraph(2, [(0, 1)]), True),
        (Multigraph(1, [(0, 0)]), True),
        (Multigraph(2, [(0, 1), (0, 1), (0, 1)]), True),
        (Multigraph(3, [(0, 1), (1, 2)]), False),
        (Multigraph(2, [(0, 0), (0, 1)]), False),
        (Multigraph(2), False),
    ],
)
def test_is_block(graph, expected):  # pyright: ignore[reportMissingParameterType]
    assert is_block(graph) is expected


@pytest.mark.parametrize(
    "graph, expected",
    [
        (cycle_graph(4), True),
        (Multigraph(4, [(0, 1), (1, 2), (2, 3)]), False),
        (lookup("K4+"), True),
        (BARBELL, False),
    ],
)
def test_is_2connected(graph, expected):  # pyright: ignore[reportMissingParameterType]
    assert is_2connected(graph) is expected


def test_bridges():
    assert bridges(BARBELL) == [6]
    assert bridges(cycle_graph(2)) == []
    assert bridges(Multigraph(2, [(0, 0), (0, 1)])) == [1]


def test_bridgeless_pieces():
    pieces = bridgeless_pieces(BARBELL)
    assert [kept for _, kept in pieces] == [[0, 1, 2], [3, 4, 5]]
    assert all(piece.edge_count == 3 for piece, _ in pieces)


def test_components():
    graph = Multigraph(5, [(0, 1), (2, 3), (3, 4)])
    assert connected_components(graph) == [[0, 1], [2, 3, 4]]
    assert connected_components(graph, removed=[3]) == [[0, 1], [2], [4]]
    assert not is_connected(graph)
    assert not is_connected(Multigraph(0))


def test_components_match_networkx(random_subcubic):  # pyright: ignore[reportMissingParameterType]
    graph = random_subcubic(12, 0.2)
    expected = sorted(sorted(c) for c in nx.connected_components(to_nx_multigraph(graph)))
    assert connected_components(graph) == expected


@pytest.mark.parametrize(
    "name, expected",
    [
        ("K4+", True),
        ("K4", False),
        ("petersen", False),
        ("L", False),
    ],
)
def test_contains_k4_plus(name, expected):  # pyright: ignore[reportMissingParameterType]
    assert contains_k4_plus(lookup(name)) is expected
