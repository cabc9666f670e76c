from typing import Literal

try:
    from typing import Self, override
except ImportError:  # Python < 3.12
    from typing_extensions import Self, override

from pydantic import BaseModel, ConfigDict, Field, model_validator

from config import Config
from graphs.multigraph import Multigraph


class FamilyIndex(BaseModel):
    """Index of a family F_{i,j} or of a generalised family F^g_{i,j,k}."""

    model_config = ConfigDict(frozen=True)

    kind: Literal["F", "Fg"] = Field(..., description="Plain family or generalised family.")
    i: int = Field(..., ge=1, description="Number of degree-2 vertices plus j.")
    j: int = Field(..., ge=0, description="Number of circle steps.")
    g: int | None = Field(default=None, description="Girth parameter of a generalised family.")
    k: int | None = Field(default=None, ge=0, description="Number of attached gadget copies.")

    @model_validator(mode="after")
    def check_shape(self) -> Self:
        if self.j > self.i:
            raise ValueError(f"Family index needs j <= i, got i={self.i}, j={self.j}.")
        if self.kind == "F" and (self.g is not None or self.k is not None):
            raise ValueError("A plain family index carries neither g nor k.")
        if self.kind == "Fg":
            if self.g not in Config.SUPPORTED_GIRTHS or self.k is None:
                raise ValueError(f"A generalised family needs g in {Config.SUPPORTED_GIRTHS} and k.")
            if self.i - self.j < 2:
                raise ValueError(f"A generalised family needs i - j >= 2, got i={self.i}, j={self.j}.")
        return self

    @property
    def vertex_count(self) -> int:
        """Number of vertices of every member."""
        base = self.i + 3 * self.j
        if self.kind == "F":
            return base
        gadget = 6 if self.g == 4 else 10
        return base + (self.k or 0) * gadget

    @property
    def edge_count(self) -> int:
        base = self.i + 5 * self.j
        if self.kind == "F":
            return base
        k = self.k or 0
        gadget = 8 if self.g == 4 else 14
        return base + k * gadget + k + 1

    @override
    def __str__(self) -> str:
        if self.kind == "F":
            return f"F_{{{self.i},{self.j}}}"
        return f"F^{self.g}_{{{self.i},{self.j},{self.k}}}"


class CatalogEntry(BaseModel):
    name: str = Field(..., description="Canonical name of the graph.")
    aliases: list[str] = Field(default_factory=list, description="Alternative names.")
    description: str = Field(default="", description="Short human-readable description.")
    vertex_count: int = Field(..., ge=0, description="Number of vertices.")
    edges: list[tuple[int, int]] = Field(..., description="Edge list over 0..vertex_count-1.")

    def to_graph(self) -> Multigraph:
        return Multigraph(self.vertex_count, self.edges)


class NamedGraph(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    name: str = Field(..., description="Canonical name.")
    description: str = Field(default="", description="Short human-readable description.")
    graph: Multigraph = Field(..., description="The graph itself.")
