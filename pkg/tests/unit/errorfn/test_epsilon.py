from fractions import Fraction

import pytest

from errorfn.epsilon import NotABlock, epsilon, family_value, generalised_value, r_value, target
from families.catalog import lookup
from graphs.errors import PreconditionViolated
from graphs.multigraph import Multigraph
from graphs.operations import add_edge, disjoint_union


def test_targets():
    assert target(4) == Fraction(2, 9)
    assert target(5) == Fraction(1, 5)
    with pytest.raises(PreconditionViolated):
        _ = target(3)


@pytest.mark.parametrize(
    "g, i, j, expected",
    [
        (4, 3, 1, Fraction(2, 9)),
        (4, 2, 2, Fraction(1, 3)),
        (4, 1, 1, Fraction(2, 3)),
        (4, 3, 0, Fraction(1, 3)),
        (4, 4, 4, Fraction(0)),
        (5, 3, 3, Fraction(2, 5)),
        (5, 4, 2, Fraction(1, 5)),
        (5, 7, 0, Fraction(0)),
    ],
)
def test_family_values(g, i, j, expected):  # pyright: ignore[reportMissingParameterType]
    assert family_value(g, i, j) == expected


@pytest.mark.parametrize(
    "g, i, j, expected",
    [
        (4, 3, 1, Fraction(0)),
        (4, 2, 0, Fraction(1, 3)),
        (5, 3, 1, Fraction(1, 5)),
        (5, 2, 0, Fraction(2, 5)),
    ],
)
def test_generalised_values(g, i, j, expected):  # pyright: ignore[reportMissingParameterType]
    assert generalised_value(g, i, j) == expected


@pytest.mark.parametrize(
    "name, g, expected",
    [
        ("L", 4, Fraction(2, 9)),
        ("K2", 5, Fraction(-1, 5)),
        ("K2", 4, Fraction(-2, 9)),
        ("dodecahedron", 5, Fraction(0)),
        ("K4", 4, Fraction(2, 3)),
        ("K4", 5, Fraction(4, 5)),
        ("C1", 4, Fraction(7, 9)),
        ("K33", 4, Fraction(0)),
        ("R", 5, Fraction(1, 5)),
        ("R1", 5, Fraction(2, 5)),
        ("petersen", 5, Fraction(0)),
        ("K1", 4, Fraction(0)),
    ],
)
def test_epsilon_of_named_blocks(name, g, expected):  # pyright: ignore[reportMissingParameterType]
    assert epsilon(lookup(name), g) == expected


def test_epsilon_rows_agree_without_skipping():
    for name in ("L", "K4", "Q3", "R"):
        graph = lookup(name)
        for g in (4, 5):
            assert epsilon(graph, g, skip_zero_rows=False) == epsilon(graph, g)


def test_epsilon_needs_a_block(path_graph):  # pyright: ignore[reportMissingParameterType]
    with pytest.raises(NotABlock):
        _ = epsilon(path_graph(3), 4)


@pytest.mark.parametrize(
    "name, g, expected",
    [
        ("K3", 4, Fraction(1, 3)),
        ("Q3", 4, Fraction(1, 3)),
        ("V8", 4, Fraction(1, 3)),
        ("R1", 5, Fraction(2, 5)),
        ("dodecahedron", 5, Fraction(0)),
    ],
)
def test_r_value_of_named_graphs(name, g, expected):  # pyright: ignore[reportMissingParameterType]
    assert r_value(lookup(name), g) == expected


@pytest.mark.parametrize("g", [4, 5])
def test_r_value_of_a_tree(path_graph, g):  # pyright: ignore[reportMissingParameterType]
    tree = path_graph(6)
    assert r_value(tree, g) == -5 * target(g)


def test_r_value_sums_over_blocks():
    union, offsets = disjoint_union(lookup("K4+"), lookup("L"))
    k4_plus_end = next(v for v in range(offsets[1]) if union.degree(v) == 2)
    l_end = next(v for v in range(offsets[1], union.vertex_count) if union.degree(v) == 2)
    graph = add_edge(union, k4_plus_end, l_end)
    assert r_value(graph, 4) == Fraction(4, 9) + Fraction(2, 9) - Fraction(2, 9)


def test_r_value_of_isolated_vertices():
    assert r_value(Multigraph(3), 4) == 0
