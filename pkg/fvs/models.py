from pydantic import BaseModel, ConfigDict, Field, computed_field


class FvsCertificate(BaseModel):
    """A minimum feedback vertex set together with solver telemetry.

    Certificates are only issued by ``fvs.solver.certify``, which checks that
    the graph minus ``vertices`` is a forest.
    """

    model_config = ConfigDict(frozen=True)

    vertices: tuple[int, ...] = Field(..., description="The feedback vertex set, ascending.")
    nodes_explored: int = Field(default=0, ge=0, description="Search nodes visited by the solver.")

    @computed_field
    @property
    def size(self) -> int:
        return len(self.vertices)
