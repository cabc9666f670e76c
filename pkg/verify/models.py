from fractions import Fraction
from typing import Any

from pydantic import BaseModel, ConfigDict, Field, field_serializer

from graphs.canonical import CanonicalCode


def format_rational(value: Fraction | int) -> str:
    """Exact ``p/q`` text, or a plain integer when the denominator is 1."""
    return str(Fraction(value))


class Verdict(BaseModel):
    """Outcome of checking one claim on one graph.

    For bound claims ``holds`` is ``lhs <= rhs``; for equalities it is ``lhs == rhs``.
    """

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    claim: str = Field(..., description="Identifier of the checked claim.")
    graph_code: CanonicalCode = Field(..., description="Canonical code of the graph.")
    holds: bool = Field(..., description="Whether the claim holds on this graph.")
    lhs: Fraction | int = Field(..., description="Left-hand side, usually phi(G).")
    rhs: Fraction | int = Field(..., description="Right-hand side of the claim.")
    case: str | None = Field(default=None, description="Case label for classification claims.")
    witness: dict[str, Any] = Field(
        default_factory=dict, description="Certificate or counterexample data, JSON-ready."
    )

    @field_serializer("graph_code")
    def serialize_code(self, value: CanonicalCode) -> str:
        return value.hex()

    @field_serializer("lhs", "rhs")
    def serialize_side(self, value: Fraction | int) -> str:
        return format_rational(value)
