"""Checks that the two error-value rows agree on graphs lying in both kinds of family."""

import logging
from fractions import Fraction

from pydantic import BaseModel, ConfigDict, Field, field_serializer

from errorfn.epsilon import family_value, generalised_value
from families.generation import generate_family_g
from families.membership import member_of_F
from graphs.canonical import CanonicalCode, canonical_code
from graphs.errors import OutOfBudget


class WellDefinedBudget(BaseModel):
    """Which generalised families to generate; i is bounded by 3 and i - j >= 2 by definition."""

    max_i: int = Field(default=3, ge=0, le=3, description="Largest i of F^g_{i,j,k} to generate.")
    max_k: int = Field(default=1, ge=-1, description="Largest k of F^g_{i,j,k}; -1 generates nothing.")

    def indices(self) -> list[tuple[int, int, int]]:
        return [
            (i, j, k)
            for k in range(self.max_k + 1)
            for i in range(1, self.max_i + 1)
            for j in range(0, i - 1)
        ]


class Overlap(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    graph_code: CanonicalCode = Field(..., description="Canonical code of the shared member.")
    generalised: tuple[int, int, int] = Field(..., description="(i, j, k) of the generalised family.")
    family: tuple[int, int] = Field(..., description="(i', j') of the plain family.")
    generalised_value: Fraction = Field(..., description="Value of the generalised row.")
    family_value: Fraction = Field(..., description="Value of the plain row.")
    checked: bool = Field(..., description="Whether i' <= 4, where both rows are claimed to agree.")

    @property
    def agrees(self) -> bool:
        return self.generalised_value == self.family_value

    @field_serializer("graph_code")
    def serialize_code(self, value: CanonicalCode) -> str:
        return value.hex()

    @field_serializer("generalised_value", "family_value")
    def serialize_value(self, value: Fraction) -> str:
        return str(value)


class WellDefinedReport(BaseModel):
    g: int = Field(..., description="Girth parameter.")
    overlaps: list[Overlap] = Field(default_factory=list, description="Every shared member found.")
    skipped: list[tuple[int, int, int]] = Field(
        default_factory=list, description="Indices (i, j, k) whose members exceed the family budget."
    )

    @property
    def violations(self) -> list[Overlap]:
        return [overlap for overlap in self.overlaps if overlap.checked and not overlap.agrees]


def check_well_defined(g: int, budget: WellDefinedBudget | None = None) -> WellDefinedReport:
    """Generate members of F^g_{i,j,k} within ``budget`` and compare both rows wherever
    a member also lies in some F_{i',j'}.

    Overlaps with i' > 4 are reported with ``checked=False``: outside that range
    the plain row is never used for positive values. Indices whose members would
    exceed ``GRAPHS_FAMILY_MAX_VERTICES`` are listed in ``skipped``. The report may
    have no overlaps at all; only agreement where they occur is claimed.
    """
    budget = budget or WellDefinedBudget()
    report = WellDefinedReport(g=g)
    for i, j, k in budget.indices():
        try:
            members = generate_family_g(g, i, j, k)
        except OutOfBudget as error:
            logging.warning(f"Skipping F^{g}_{{{i},{j},{k}}}: {error}")
            report.skipped.append((i, j, k))
            continue
        for graph in members:
            family = member_of_F(graph)
            if family is None:
                continue
            report.overlaps.append(
                Overlap(
                    graph_code=canonical_code(graph),
                    generalised=(i, j, k),
                    family=family,
                    generalised_value=generalised_value(g, i, j),
                    family_value=family_value(g, *family),
                    checked=family[0] <= 4,
                )
            )
    logging.info(
        f"Well-definedness for g={g}: {len(report.overlaps)} overlaps, "
        f"{len(report.violations)} violations, {len(report.skipped)} indices skipped"
    )
    return report
