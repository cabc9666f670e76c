"""Named graphs used throughout the project.

Edge lists live in ``catalog.json`` next to this module. Cycles are built on
demand from names such as ``C5`` or ``cycle(5)``.
"""

import functools
import json
import logging
import re
from pathlib import Path

from families.models import CatalogEntry, NamedGraph
from graphs.canonical import canonical_code
from graphs.multigraph import Multigraph
from graphs.structure import girth

CATALOG_PATH = Path(__file__).with_name("catalog.json")

_CYCLE_NAME = re.compile(r"^(?:C(\d+)|cycle\((\d+)\))$", re.IGNORECASE)


class UnknownName(ValueError):
    def __init__(self, name: str):
        self.name = name
        super().__init__(f"No graph named '{name}' in the catalog.")


@functools.cache
def _entries() -> dict[str, CatalogEntry]:
    raw = json.loads(CATALOG_PATH.read_text(encoding="utf-8"))
    entries: dict[str, CatalogEntry] = {}
    for item in raw:
        entry = CatalogEntry.model_validate(item)
        for key in (entry.name.casefold(), *(alias.casefold() for alias in entry.aliases)):
            if key in entries:
                raise ValueError(f"Catalog name '{key}' is defined twice.")
            entries[key] = entry
    logging.info(f"Loaded {len(raw)} named graphs from {CATALOG_PATH.name}")
    return entries


def cycle_graph(length: int) -> Multigraph:
    """Cycle with ``length`` edges; ``C1`` is a loop and ``C2`` a pair of parallel edges."""
    if length < 1:
        raise ValueError(f"Cycle length must be positive, got {length}.")
    return Multigraph(length, [(v, (v + 1) % length) for v in range(length)])


def catalog_names() -> list[str]:
    return sorted({entry.name for entry in _entries().values()})


def named(name: str) -> NamedGraph:
    """Look up a named graph, ignoring case, including the ``C<n>`` and ``cycle(<n>)`` forms."""
    key = name.casefold()
    if match := _CYCLE_NAME.match(name):
        length = int(match.group(1) or match.group(2))
        if length > 1:
            return NamedGraph(
                name=f"C{length}", description=f"Cycle of length {length}.", graph=cycle_graph(length)
            )
        if length == 0:
            raise UnknownName(name)
        key = "c1"

    entry = _entries().get(key)
    if entry is None:
        raise UnknownName(name)
    if entry.name in ("R1", "R2"):
        _check_girth5_pair()
    return NamedGraph(name=entry.name, description=entry.description, graph=entry.to_graph())


def lookup(name: str) -> Multigraph:
    return named(name).graph


@functools.cache
def _check_girth5_pair() -> None:
    """Compare the stored R1/R2 edge lists with the girth-5 members of F_{3,3}.

    Raises:
        RuntimeError: if the stored graphs are not exactly those members.
    """
    # generation imports this module
    from families.generation import generate_family

    generated = {canonical_code(g) for g in generate_family(3, 3) if girth(g) >= 5}
    stored = {canonical_code(_entries()[name.casefold()].to_graph()) for name in ("R1", "R2")}
    if generated != stored or len(stored) != 2:
        raise RuntimeError(
            f"Stored R1/R2 do not match the {len(generated)} girth-5 members of F_{{3,3}}."
        )
    logging.info("R1 and R2 match the girth-5 members of F_{3,3}")
