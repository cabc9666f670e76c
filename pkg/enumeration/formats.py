"""Reading and writing graph files.

Two formats are supported. ``graph6`` is the standard one-graph-per-line encoding
for simple graphs, handled by networkx. ``medge`` carries multigraphs: a header
line ``n m`` followed by ``m`` lines ``u v`` with 0-based endpoints, loops written
as ``u u``. Several medge graphs may follow each other in one file; blank lines
and lines starting with ``#`` are ignored.
"""

import logging
from collections.abc import Iterable, Iterator
from pathlib import Path
from typing import Literal

import networkx as nx

from enumeration.generator import GraphStream
from graphs.errors import DegreeExceeded, GraphError
from graphs.multigraph import Multigraph

GraphFormat = Literal["graph6", "medge"]
FORMATS: tuple[GraphFormat, ...] = ("graph6", "medge")


class ParseError(ValueError):
    def __init__(self, line: int, reason: str):
        self.line = line
        self.reason = reason
        super().__init__(f"Line {line}: {reason}")


class NotSimple(ValueError):
    def __init__(self, graph: Multigraph):
        self.graph = graph
        super().__init__(f"graph6 cannot encode {graph!r}: it has loops or parallel edges.")


class UnknownFormat(ValueError):
    def __init__(self, name: str):
        self.name = name
        super().__init__(f"Unknown graph format '{name}', expected one of {', '.join(FORMATS)}.")


def to_networkx(graph: Multigraph) -> nx.Graph:
    if not graph.is_simple():
        raise NotSimple(graph)
    result = nx.Graph()
    result.add_nodes_from(graph.vertices)
    result.add_edges_from(graph.edges)
    return result


def from_networkx(graph: nx.Graph) -> Multigraph:
    index = {node: position for position, node in enumerate(sorted(graph.nodes))}
    return Multigraph(len(index), [(index[u], index[v]) for u, v in graph.edges])


def encode_graph6(graph: Multigraph) -> str:
    return nx.to_graph6_bytes(to_networkx(graph), header=False).decode("ascii").strip()


def decode_graph6(text: str) -> Multigraph:
    return from_networkx(nx.from_graph6_bytes(text.encode("ascii")))


def encode_medge(graph: Multigraph) -> str:
    lines = [f"{graph.vertex_count} {graph.edge_count}"]
    lines.extend(f"{u} {v}" for u, v in graph.edges)
    return "\n".join(lines)


def _numbers(line_number: int, text: str) -> tuple[int, int]:
    fields = text.split()
    if len(fields) != 2:
        raise ParseError(line_number, f"expected two integers, got '{text}'")
    try:
        return int(fields[0]), int(fields[1])
    except ValueError:
        raise ParseError(line_number, f"expected two integers, got '{text}'") from None


def parse_medge(lines: Iterable[str]) -> Iterator[Multigraph]:
    """Parse consecutive medge graphs.

    Raises:
        ParseError: on malformed lines, a truncated graph, or an edge the
            multigraph rejects (bad endpoint, degree above 3).
    """
    header: tuple[int, int, int] | None = None
    edges: list[tuple[int, int]] = []
    line_number = 0
    for line_number, raw in enumerate(lines, start=1):
        text = raw.strip()
        if not text or text.startswith("#"):
            continue
        first, second = _numbers(line_number, text)
        if header is None:
            if first < 0 or second < 0:
                raise ParseError(line_number, "negative vertex or edge count")
            header = (first, second, line_number)
            edges = []
        else:
            edges.append((first, second))

        if header is not None and len(edges) == header[1]:
            try:
                yield Multigraph(header[0], edges)
            except GraphError as error:
                raise ParseError(header[2], str(error)) from error
            header = None

    if header is not None:
        raise ParseError(line_number, f"expected {header[1]} edges, found {len(edges)}")


def parse_graph6(lines: Iterable[str]) -> Iterator[Multigraph]:
    for line_number, raw in enumerate(lines, start=1):
        text = raw.strip()
        if text.startswith(">>graph6<<"):
            text = text.removeprefix(">>graph6<<")
        if not text or text.startswith("#"):
            continue
        try:
            graph = decode_graph6(text)
        except DegreeExceeded as error:
            raise ParseError(line_number, "graph is not subcubic") from error
        except (nx.NetworkXError, ValueError, UnicodeEncodeError) as error:
            raise ParseError(line_number, f"invalid graph6 string '{text}'") from error
        yield graph


def _check_format(fmt: str) -> GraphFormat:
    match fmt:
        case "graph6":
            return "graph6"
        case "medge":
            return "medge"
        case _:
            raise UnknownFormat(fmt)


def read_graphs(path: str | Path, fmt: str) -> GraphStream:
    """Lazily read every graph of a file; the file is reopened on each iteration."""
    checked = _check_format(fmt)
    source = Path(path)

    def lines(handle: Iterable[bytes]) -> Iterator[str]:
        for line_number, raw in enumerate(handle, start=1):
            try:
                yield raw.decode("utf-8")
            except UnicodeDecodeError as error:
                raise ParseError(line_number, "input is not valid UTF-8") from error

    def produce() -> Iterator[Multigraph]:
        with source.open("rb") as handle:
            if checked == "graph6":
                yield from parse_graph6(lines(handle))
            else:
                yield from parse_medge(lines(handle))

    return GraphStream(source=f"file({source}, {checked})", factory=produce)


def write_graphs(graphs: Iterable[Multigraph], path: str | Path, fmt: str) -> int:
    """Write ``graphs`` to ``path`` and return how many were written.

    Raises:
        NotSimple: when writing a graph with loops or parallel edges as graph6.
    """
    checked = _check_format(fmt)
    encode = encode_graph6 if checked == "graph6" else encode_medge
    blocks = [encode(graph) for graph in graphs]
    separator = "\n" if checked == "graph6" else "\n\n"
    _ = Path(path).write_text(separator.join(blocks) + ("\n" if blocks else ""), encoding="utf-8")
    logging.info(f"Wrote {len(blocks)} graphs to {path} as {checked}")
    return len(blocks)
