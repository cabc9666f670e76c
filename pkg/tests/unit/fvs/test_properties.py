from itertools import combinations_with_replacement

import pytest

from enumeration.generator import enumerate_up_to
from families.catalog import lookup
from families.generation import generate_family
from fvs.solver import min_fvs_minus_edge, phi
from graphs.multigraph import Multigraph
from graphs.operations import circ_op, delete_vertices, subdivide_edge


def _worst_edge_deletion(graph: Multigraph) -> int:
    return max(min_fvs_minus_edge(graph, edge_id).size for edge_id in range(graph.edge_count))


def _bases() -> list[Multigraph]:
    graphs = [graph for graph in enumerate_up_to(5) if graph.edge_count > 0]
    graphs.extend(lookup(name) for name in ("C1", "C2", "theta", "K4"))
    graphs.extend(generate_family(3, 1))
    return graphs


def test_deleting_a_vertex_costs_no_more_than_deleting_an_incident_edge():
    for graph in enumerate_up_to(6):
        whole = phi(graph)
        for edge_id, (u, v) in enumerate(graph.edges):
            without_edge = min_fvs_minus_edge(graph, edge_id).size
            assert without_edge <= whole
            for endpoint in {u, v}:
                assert phi(delete_vertices(graph, [endpoint])[0]) <= without_edge


@pytest.mark.parametrize("graph", _bases(), ids=repr)
def test_subdividing_keeps_both_bounds(graph):  # pyright: ignore[reportMissingParameterType]
    whole, worst = phi(graph), _worst_edge_deletion(graph)
    for edge_id in range(graph.edge_count):
        grown = subdivide_edge(graph, edge_id)
        assert phi(grown) <= whole
        assert _worst_edge_deletion(grown) <= worst


@pytest.mark.parametrize("graph", _bases(), ids=repr)
def test_circle_step_raises_both_bounds_by_at_most_one(graph):  # pyright: ignore[reportMissingParameterType]
    whole, worst = phi(graph), _worst_edge_deletion(graph)
    anchors = [v for v in graph.vertices if graph.degree(v) == 2]
    for anchor in anchors:
        for first, second in combinations_with_replacement(range(graph.edge_count), 2):
            grown = circ_op(graph, first, second, anchor)
            assert phi(grown) <= whole + 1
            assert _worst_edge_deletion(grown) <= worst + 1


def test_circle_step_on_a_path_adds_exactly_one():
    path = Multigraph(3, [(0, 1), (1, 2)])
    grown = circ_op(path, 0, 1, 1)
    assert (grown.vertex_count, grown.edge_count) == (6, 7)
    assert phi(grown) == 1
