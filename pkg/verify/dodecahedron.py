"""Characterisation of disjoint unions of dodecahedra among cubic graphs.

A cubic graph is a disjoint union of dodecahedra exactly when it has girth 5
and, for every vertex v and every two neighbours a, b of v, the graph G - v has
two vertex-disjoint 5-cycles, one through a and the other through b.
"""

import logging
from itertools import combinations

from families.catalog import lookup
from graphs.canonical import canonical_code
from graphs.errors import NotCubic
from graphs.multigraph import Multigraph
from graphs.operations import delete_vertices, induced_subgraph
from graphs.structure import connected_components, cycles_of_length, girth
from verify.models import Verdict


def _check_cubic(graph: Multigraph) -> None:
    for vertex in graph.vertices:
        if graph.degree(vertex) != 3:
            raise NotCubic(vertex, graph.degree(vertex))


def dodeca_condition(graph: Multigraph) -> bool:
    """Whether the cubic ``graph`` satisfies the disjoint 5-cycle condition.

    Raises:
        NotCubic: if some vertex does not have degree 3.
    """
    _check_cubic(graph)
    if girth(graph) != 5:
        return False

    for vertex in graph.vertices:
        reduced, kept = delete_vertices(graph, [vertex])
        cycles = [frozenset(kept[v] for v in cycle) for cycle in cycles_of_length(reduced, 5)]
        for a, b in combinations(sorted(graph.neighbors(vertex)), 2):
            through_a = [c for c in cycles if a in c]
            through_b = [c for c in cycles if b in c and a not in c]
            if not any(first.isdisjoint(second) for first in through_a for second in through_b):
                logging.debug(f"No disjoint 5-cycles through {a} and {b} avoiding {vertex}")
                return False
    return True


def is_union_of_dodecahedra(graph: Multigraph) -> bool:
    dodecahedron = canonical_code(lookup("dodecahedron"))
    components = connected_components(graph)
    return bool(components) and all(
        canonical_code(induced_subgraph(graph, part)[0]) == dodecahedron for part in components
    )


def check_dodeca_theorem(graph: Multigraph) -> Verdict:
    """Check that the condition holds exactly for disjoint unions of dodecahedra.

    ``lhs`` and ``rhs`` are 1/0 for the condition and for the structure.

    Raises:
        NotCubic: if some vertex does not have degree 3.
    """
    condition = dodeca_condition(graph)
    structure = is_union_of_dodecahedra(graph)
    return Verdict(
        claim="dodecahedron-characterisation",
        graph_code=canonical_code(graph),
        holds=condition == structure,
        lhs=int(condition),
        rhs=int(structure),
        witness={"condition": condition, "dodecahedra": structure},
    )
