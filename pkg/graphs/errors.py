"""Errors raised across the graph packages.

All of them are ``ValueError`` subclasses so callers that only care about
"bad input" can catch a single type.
"""


class GraphError(ValueError):
    """Base class for every domain error of this project."""


class BadEndpoint(GraphError):
    def __init__(self, vertex: int, vertex_count: int):
        self.vertex = vertex
        self.vertex_count = vertex_count
        super().__init__(
            f"Endpoint {vertex} is out of range for a graph on {vertex_count} vertices."
        )


class DegreeExceeded(GraphError):
    def __init__(self, vertex: int, degree: int):
        self.vertex = vertex
        self.degree = degree
        super().__init__(f"Vertex {vertex} would have degree {degree} > 3.")


class NotDegreeTwo(GraphError):
    def __init__(self, vertex: int, degree: int):
        self.vertex = vertex
        self.degree = degree
        super().__init__(f"Vertex {vertex} has degree {degree}, expected 2.")


class LoopAtVertex(GraphError):
    def __init__(self, vertex: int):
        self.vertex = vertex
        super().__init__(f"Vertex {vertex} carries a loop.")


class NotCubic(GraphError):
    def __init__(self, vertex: int, degree: int):
        self.vertex = vertex
        self.degree = degree
        super().__init__(f"Graph is not cubic: vertex {vertex} has degree {degree}.")


class PreconditionViolated(GraphError):
    def __init__(self, reason: str):
        self.reason = reason
        super().__init__(reason)


class TooLarge(GraphError):
    def __init__(self, size: int, cap: int, what: str = "graph"):
        self.size = size
        self.cap = cap
        super().__init__(f"{what} has {size} vertices, above the configured cap of {cap}.")


class OutOfBudget(GraphError):
    def __init__(self, size: int, cap: int, what: str = "family"):
        self.size = size
        self.cap = cap
        super().__init__(
            f"{what} members have {size} vertices, above the configured budget of {cap}."
        )
