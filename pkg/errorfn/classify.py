"""Structural classification of r_4 and r_5 for graphs without two disjoint short cycles.

A graph is cut into pieces by deleting all of its bridges; most cases describe
graphs assembled from specific pieces joined by bridges, and each case also
fixes the value of r_g. The classifier returns the lowest-numbered case whose
structure and value both match.
"""

import functools
from fractions import Fraction
from typing import Any

from pydantic import BaseModel, ConfigDict, Field, field_serializer

from errorfn.epsilon import r_value
from families.catalog import lookup
from families.membership import fg_indices, member_of_F
from graphs.canonical import CanonicalCode, canonical_code
from graphs.errors import PreconditionViolated
from graphs.multigraph import Multigraph
from graphs.structure import (
    block_decomposition,
    bridgeless_pieces,
    contains_k4_plus,
    has_two_disjoint_short_cycles,
    is_connected,
)


class ClassificationError(RuntimeError):
    def __init__(self, g: int, r: Fraction, pieces: list[str]):
        self.g = g
        self.r = r
        self.pieces = pieces
        super().__init__(f"No case of the r_{g} classification matches (r = {r}, pieces = {pieces}).")


class RClassification(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    g: int = Field(..., description="Girth parameter, 4 or 5.")
    case_id: str = Field(..., description="Number of the matching case.")
    subcase: str | None = Field(default=None, description="Letter of the matching alternative, if any.")
    r: Fraction = Field(..., description="r_g of the graph.")
    witness: dict[str, Any] = Field(default_factory=dict, description="Pieces and blocks behind the case.")

    @field_serializer("r")
    def serialize_r(self, value: Fraction) -> str:
        return str(value)


class Piece(BaseModel):
    """What a bridgeless piece is, as far as the classifications care."""

    model_config = ConfigDict(frozen=True)

    name: str | None = Field(default=None, description="Catalog name when isomorphic to a named graph.")
    family: tuple[int, int] | None = Field(default=None, description="(i, j) with the piece in F_{i,j}.")
    generalised: tuple[tuple[int, int, int], ...] = Field(
        default=(), description="Indices (i, j, k) with the piece in F^g_{i,j,k}."
    )
    vertex_count: int = Field(..., description="Vertices in the piece.")

    def label(self) -> str:
        if self.name:
            return self.name
        if self.family:
            return f"F_{{{self.family[0]},{self.family[1]}}}"
        if self.generalised:
            i, j, k = self.generalised[0]
            return f"F^g_{{{i},{j},{k}}}"
        return f"other({self.vertex_count})"

    def in_family(self, *indices: tuple[int, int]) -> bool:
        return self.family in indices


@functools.cache
def _named_codes() -> dict[CanonicalCode, str]:
    return {canonical_code(lookup(name)): name for name in ("K3", "K4", "K4+", "L", "R", "Q3", "V8")}


def describe(graph: Multigraph, g: int) -> Piece:
    return Piece(
        name=_named_codes().get(canonical_code(graph)),
        family=member_of_F(graph),
        generalised=fg_indices(graph, g),
        vertex_count=graph.vertex_count,
    )


def pieces_of(graph: Multigraph, g: int) -> list[Piece]:
    return [describe(piece, g) for piece, _ in bridgeless_pieces(graph)]


def _block_names(graph: Multigraph) -> set[str]:
    names = _named_codes()
    return {
        names.get(canonical_code(block.graph), "")
        for block in block_decomposition(graph).blocks
    } - {""}


def _check_precondition(graph: Multigraph, g: int) -> None:
    if not is_connected(graph):
        raise PreconditionViolated("The classification needs a connected graph.")
    if not graph.is_simple():
        raise PreconditionViolated("The classification needs a simple graph.")
    if has_two_disjoint_short_cycles(graph, g):
        raise PreconditionViolated(f"The graph has two disjoint cycles of length below {g}.")


def _witness(pieces: list[Piece], **extra: Any) -> dict[str, Any]:
    return {"pieces": [piece.label() for piece in pieces], **extra}


def classify_r4(graph: Multigraph) -> RClassification:
    """Which case of the r_4 classification a graph falls into.

    The graph must be connected, simple and without two disjoint triangles.

    Raises:
        PreconditionViolated: if the graph does not qualify.
        ClassificationError: if no case matches.
    """
    _check_precondition(graph, 4)
    r = r_value(graph, 4)
    pieces = pieces_of(graph, 4)
    names = [piece.name for piece in pieces]
    blocks = _block_names(graph)

    def result(case_id: str, subcase: str | None = None) -> RClassification:
        return RClassification(g=4, case_id=case_id, subcase=subcase, r=r, witness=_witness(pieces))

    whole = describe(graph, 4)
    if whole.name in ("K3", "K4", "K4+") or whole.in_family((2, 2)):
        return result("1")

    if r == Fraction(4, 9) and names.count("K4+") == 1 and names.count("L") == len(pieces) - 1 >= 1:
        return result("2")

    if r == Fraction(1, 3):
        others = [p for p in pieces if p.name not in ("K4+", "L")]
        if (
            names.count("K4+") == 1
            and len(others) == 1
            and others[0].in_family((3, 2), (4, 0))
        ):
            return result("3", "a")
        if names.count("K3") == 1 and names.count("L") == len(pieces) - 1 >= 1:
            return result("3", "b")

    def tiny_block() -> bool:
        return bool(blocks & {"K4+", "K3"})

    if r == Fraction(2, 9):
        if tiny_block():
            return result("4", "a")
        if all(p.in_family((3, 1)) for p in pieces):
            return result("4", "b")

    if r == Fraction(1, 9):
        if tiny_block():
            return result("5", "a")
        special = [
            p
            for p in pieces
            if p.in_family((3, 2), (4, 0))
            or any((i, j) == (3, 0) and k >= 1 for i, j, k in p.generalised)
        ]
        rest = [p for p in pieces if p not in special]
        if len(special) == 1 and all(p.in_family((3, 1)) for p in rest):
            return result("5", "b")

    if r <= 0:
        return result("6")
    raise ClassificationError(4, r, [piece.label() for piece in pieces])


def classify_r5(graph: Multigraph) -> RClassification:
    """Which case of the r_5 classification a graph falls into.

    The graph must be connected, simple and without two disjoint cycles of
    length below five.

    Raises:
        PreconditionViolated: if the graph does not qualify.
        ClassificationError: if no case matches.
    """
    _check_precondition(graph, 5)
    r = r_value(graph, 5)
    pieces = pieces_of(graph, 5)

    def result(case_id: str, subcase: str | None = None) -> RClassification:
        return RClassification(g=5, case_id=case_id, subcase=subcase, r=r, witness=_witness(pieces))

    if _named_codes().get(canonical_code(graph)) == "K4" or contains_k4_plus(graph):
        return result("1")

    def in_f(piece: Piece, i: int, top: int) -> bool:
        return piece.family is not None and piece.family[0] == i and piece.family[1] <= top

    if r == Fraction(2, 5):
        heads = [p for p in pieces if in_f(p, 3, 3)]
        if len(heads) == 1 and all(in_f(p, 4, 3) for p in pieces if p is not heads[0]):
            return result("2")

    if r == Fraction(1, 5):
        blocks = block_decomposition(graph).blocks
        if any(in_f(describe(block.graph, 5), 3, 2) for block in blocks):
            return result("3", "a")
        if any(index[:2] == (3, 1) for index in fg_indices(graph, 5)):
            return result("3", "b")
        if all(
            in_f(p, 4, 4) or any((i, j) == (3, 0) for i, j, _ in p.generalised) for p in pieces
        ):
            return result("3", "c")

    if r <= 0:
        return result("4")
    raise ClassificationError(5, r, [piece.label() for piece in pieces])
