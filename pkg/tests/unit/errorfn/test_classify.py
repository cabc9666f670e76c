from fractions import Fraction

import pytest

from errorfn.classify import classify_r4, classify_r5, describe, pieces_of
from families.catalog import lookup
from graphs.errors import PreconditionViolated
from graphs.multigraph import Multigraph
from graphs.operations import add_edge, disjoint_union


def _joined(first: str, second: str) -> Multigraph:
    """Two named graphs joined by one edge between degree-2 vertices."""
    union, offsets = disjoint_union(lookup(first), lookup(second))
    left = next(v for v in range(offsets[1]) if union.degree(v) == 2)
    right = next(v for v in range(offsets[1], union.vertex_count) if union.degree(v) == 2)
    return add_edge(union, left, right)


@pytest.mark.parametrize(
    "graph, case_id, subcase, r",
    [
        (lookup("K4+"), "1", None, Fraction(4, 9)),
        (lookup("K3"), "1", None, Fraction(1, 3)),
        (lookup("Q3"), "1", None, Fraction(1, 3)),
        (_joined("K4+", "L"), "2", None, Fraction(4, 9)),
        (lookup("L"), "4", "b", Fraction(2, 9)),
        (lookup("petersen"), "6", None, Fraction(0)),
        (lookup("C5"), "6", None, Fraction(0)),
    ],
)
def test_classify_r4(graph, case_id, subcase, r):  # pyright: ignore[reportMissingParameterType]
    result = classify_r4(graph)
    assert (result.case_id, result.subcase) == (case_id, subcase)
    assert result.r == r


def test_two_copies_of_l():
    result = classify_r4(_joined("L", "L"))
    assert result.r == Fraction(2, 9)
    assert (result.case_id, result.subcase) == ("4", "b")
    assert result.witness["pieces"] == ["L", "L"]


@pytest.mark.parametrize(
    "name, case_id, subcase, r",
    [
        ("K4", "1", None, Fraction(4, 5)),
        ("R1", "2", None, Fraction(2, 5)),
        ("R2", "2", None, Fraction(2, 5)),
        ("R", "3", "c", Fraction(1, 5)),
        ("dodecahedron", "4", None, Fraction(0)),
        ("petersen", "4", None, Fraction(0)),
    ],
)
def test_classify_r5(name, case_id, subcase, r):  # pyright: ignore[reportMissingParameterType]
    result = classify_r5(lookup(name))
    assert (result.case_id, result.subcase) == (case_id, subcase)
    assert result.r == r


def test_classification_serialises_r_exactly():
    dumped = classify_r5(lookup("R1")).model_dump(mode="json")
    assert dumped["r"] == "2/5"


def test_preconditions():
    barbell = Multigraph(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (2, 3)])
    with pytest.raises(PreconditionViolated):
        _ = classify_r4(barbell)
    with pytest.raises(PreconditionViolated):
        _ = classify_r4(Multigraph(2))
    with pytest.raises(PreconditionViolated):
        _ = classify_r5(lookup("theta"))


def test_pieces_and_descriptions():
    pieces = pieces_of(_joined("K4+", "L"), 4)
    assert sorted(piece.label() for piece in pieces) == ["K4+", "L"]
    assert describe(lookup("R"), 5).family == (4, 2)
    assert describe(lookup("K33"), 4).generalised == ((3, 1, 0),)
