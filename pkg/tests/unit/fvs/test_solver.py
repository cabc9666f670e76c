from itertools import combinations

import pytest

from families.catalog import cycle_graph, lookup
from fvs.solver import (
    certify,
    is_forest,
    is_fvs,
    lower_bound,
    max_induced_forest,
    min_fvs,
    min_fvs_minus_edge,
    min_fvs_with_required,
    phi,
)
from graphs.errors import BadEndpoint, TooLarge
from graphs.multigraph import Multigraph
from graphs.operations import disjoint_union
from tests.unit.shared.oracles import brute_force_phi, brute_force_phi_with_required


@pytest.mark.parametrize(
    "name, expected",
    [
        ("C5", 1),
        ("C1", 1),
        ("theta", 1),
        ("K4", 2),
        ("L", 2),
        ("K33", 2),
        ("Q3", 3),
        ("V8", 3),
        ("petersen", 3),
        ("R", 3),
        ("R1", 4),
        ("R2", 4),
        ("dodecahedron", 6),
    ],
)
def test_phi_of_named_graphs(name, expected):  # pyright: ignore[reportMissingParameterType]
    assert phi(lookup(name)) == expected


def test_forest_needs_nothing(path_graph):  # pyright: ignore[reportMissingParameterType]
    certificate = min_fvs(path_graph(6))
    assert certificate.vertices == ()
    assert certificate.size == 0
    assert max_induced_forest(path_graph(6)) == tuple(range(6))


def test_result_is_lexicographically_least(k4):  # pyright: ignore[reportMissingParameterType]
    assert min_fvs(k4).vertices == (0, 1)
    assert min_fvs(cycle_graph(5)).vertices == (0,)


def test_result_is_least_among_all_optimal_sets(random_subcubic):  # pyright: ignore[reportMissingParameterType]
    for _ in range(10):
        graph = random_subcubic(8)
        size = brute_force_phi(graph)
        least = next(
            subset for subset in combinations(graph.vertices, size) if is_fvs(graph, subset)
        )
        assert min_fvs(graph).vertices == least


def test_matches_brute_force(random_subcubic):  # pyright: ignore[reportMissingParameterType]
    for n in range(1, 10):
        for _ in range(6):
            graph = random_subcubic(n)
            certificate = min_fvs(graph)
            assert certificate.size == brute_force_phi(graph)
            assert is_fvs(graph, certificate.vertices)


def test_matches_brute_force_on_multigraphs():
    graphs = [
        Multigraph(3, [(0, 0), (1, 2), (1, 2), (0, 1)]),
        Multigraph(4, [(0, 1), (0, 1), (2, 3), (2, 3), (1, 2), (0, 3)]),
        disjoint_union(lookup("theta"), lookup("C1"), lookup("K4"))[0],
    ]
    for graph in graphs:
        assert phi(graph) == brute_force_phi(graph)


def test_required_vertices(k4, petersen):  # pyright: ignore[reportMissingParameterType]
    c5 = cycle_graph(5)
    assert min_fvs_with_required(c5, [3]).vertices == (3,)
    assert min_fvs_with_required(k4, [2]).size == 2
    assert 2 in min_fvs_with_required(k4, [2]).vertices
    for vertex in lookup("L").vertices:
        assert min_fvs_with_required(lookup("L"), [vertex]).size <= 2
    assert min_fvs_with_required(petersen, [0, 1]).size == brute_force_phi_with_required(petersen, {0, 1})


def test_required_vertex_out_of_range(k4):  # pyright: ignore[reportMissingParameterType]
    with pytest.raises(BadEndpoint):
        _ = min_fvs_with_required(k4, [4])


def test_minus_edge(k4):  # pyright: ignore[reportMissingParameterType]
    assert min_fvs_minus_edge(cycle_graph(5), 0).size == 0
    for edge_id in range(k4.edge_count):
        assert min_fvs_minus_edge(k4, edge_id).size == 1
    graph = lookup("L")
    for edge_id in range(graph.edge_count):
        assert min_fvs_minus_edge(graph, edge_id).size == 1


def test_largest_induced_forest(cube, k4):  # pyright: ignore[reportMissingParameterType]
    assert len(max_induced_forest(cube)) == 5
    assert len(max_induced_forest(k4)) == 2


@pytest.mark.parametrize(
    "graph, vertices, expected",
    [
        (Multigraph(1, [(0, 0)]), [], False),
        (Multigraph(1, [(0, 0)]), [0], True),
        (cycle_graph(2), [], False),
        (Multigraph(3, [(0, 1), (1, 2)]), [], True),
    ],
)
def test_is_fvs(graph, vertices, expected):  # pyright: ignore[reportMissingParameterType]
    assert is_fvs(graph, vertices) is expected


def test_no_two_vertices_break_the_cube(cube):  # pyright: ignore[reportMissingParameterType]
    assert not any(is_fvs(cube, pair) for pair in combinations(cube.vertices, 2))


def test_is_forest(petersen, path_graph):  # pyright: ignore[reportMissingParameterType]
    assert is_forest(path_graph(4))
    assert is_forest(Multigraph(0))
    assert not is_forest(petersen)


def test_lower_bound_never_exceeds_phi(random_subcubic):  # pyright: ignore[reportMissingParameterType]
    for name in ("petersen", "dodecahedron", "Q3", "R1"):
        graph = lookup(name)
        assert lower_bound(graph) <= phi(graph)
    for _ in range(20):
        graph = random_subcubic(9)
        assert lower_bound(graph) <= brute_force_phi(graph)


def test_certify_rejects_non_solutions(k4):  # pyright: ignore[reportMissingParameterType]
    with pytest.raises(RuntimeError):
        _ = certify(k4, [0])
    assert certify(k4, [1, 0]).vertices == (0, 1)


def test_size_cap():
    big = Multigraph(30, [(v, v + 1) for v in range(29)])
    with pytest.raises(TooLarge):
        _ = min_fvs(big)
