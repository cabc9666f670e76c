from fractions import Fraction

import pytest
from pydantic import ValidationError

import settings
from errorfn.epsilon import family_value, generalised_value
from errorfn.well_defined import Overlap, WellDefinedBudget, check_well_defined
from graphs.canonical import CanonicalCode

_GADGET = {4: (6, 8), 5: (10, 14)}
_MEETING = {4: ((3, 1, 1), (3, 3)), 5: ((3, 1, 1), (4, 4))}


def test_empty_budget_gives_empty_report():
    report = check_well_defined(4, WellDefinedBudget(max_k=-1))
    assert report.overlaps == []
    assert report.violations == []
    assert report.skipped == []


def test_budget_indices():
    assert WellDefinedBudget(max_i=3, max_k=0).indices() == [(2, 0, 0), (3, 0, 0), (3, 1, 0)]
    with pytest.raises(ValidationError):
        _ = WellDefinedBudget(max_i=4)


@pytest.mark.parametrize("g", [4, 5])
def test_rows_agree_on_every_shared_member(g):  # pyright: ignore[reportMissingParameterType]
    report = check_well_defined(g, WellDefinedBudget(max_i=3, max_k=1))
    assert report.violations == []
    assert report.skipped == []
    gadget_vertices, gadget_edges = _GADGET[g]
    for overlap in report.overlaps:
        (i, j, k), (i2, j2) = overlap.generalised, overlap.family
        assert k >= 1
        assert i + 3 * j + k * gadget_vertices == i2 + 3 * j2
        assert i + 5 * j + k * gadget_edges + k + 1 == i2 + 5 * j2
        if overlap.checked:
            assert (overlap.generalised, overlap.family) == _MEETING[g]
            assert overlap.agrees


@pytest.mark.parametrize(
    "g, expected",
    [(4, Fraction(0)), (5, Fraction(1, 5))],
)
def test_rows_agree_at_the_only_possible_meeting(g, expected):  # pyright: ignore[reportMissingParameterType]
    (i, j, _), family = _MEETING[g]
    assert generalised_value(g, i, j) == family_value(g, *family) == expected


def test_indices_over_the_family_budget_are_skipped(monkeypatch: pytest.MonkeyPatch):
    monkeypatch.setattr(settings, "FAMILY_MAX_VERTICES", 12)
    report = check_well_defined(5, WellDefinedBudget(max_i=3, max_k=1))
    assert report.skipped == [(3, 0, 1), (3, 1, 1)]
    assert report.violations == []


def test_overlaps_serialise_exactly():
    overlap = Overlap(
        graph_code=CanonicalCode(b"\x10\x01"),
        generalised=(3, 1, 1),
        family=(4, 4),
        generalised_value=Fraction(1, 5),
        family_value=Fraction(1, 5),
        checked=True,
    )
    dumped = overlap.model_dump(mode="json")
    assert dumped["graph_code"] == "1001"
    assert dumped["family_value"] == dumped["generalised_value"] == "1/5"
    assert overlap.agrees
