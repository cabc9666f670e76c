"""Line-delimited JSON report records written by every sub-command."""

import sys
import time
from collections.abc import Iterator
from contextlib import contextmanager
from typing import Any, TextIO

from pydantic import BaseModel, Field

from config import Config
from verify.models import Verdict

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2


class Report(BaseModel):
    """One self-contained output record; rationals are reduced ``p/q`` strings."""

    schema_version: int = Field(
        default=Config.REPORT_SCHEMA, serialization_alias="schema", description="Record layout version."
    )
    command: str = Field(..., description="Sub-command or claim that produced the record.")
    graph: str | None = Field(default=None, description="Hex canonical code or catalog name.")
    holds: bool | None = Field(default=None, description="Verdict, when the record carries one.")
    data: dict[str, Any] = Field(default_factory=dict, description="Command-specific JSON-ready fields.")
    elapsed_ms: int = Field(default=0, ge=0, description="Wall time spent on this record.")

    @classmethod
    def from_verdict(cls, command: str, verdict: Verdict, elapsed_ms: int = 0) -> "Report":
        fields = verdict.model_dump(mode="json", exclude={"graph_code", "holds"})
        return cls(
            command=command,
            graph=verdict.graph_code.hex(),
            holds=verdict.holds,
            data=fields,
            elapsed_ms=elapsed_ms,
        )


def emit(report: Report, stream: TextIO | None = None) -> None:
    out = stream or sys.stdout
    _ = out.write(report.model_dump_json(by_alias=True) + "\n")


class Stopwatch:
    def __init__(self):
        self.elapsed_ms = 0


@contextmanager
def stopwatch() -> Iterator[Stopwatch]:
    """Measure the wall time of a block in whole milliseconds."""
    watch = Stopwatch()
    start = time.perf_counter()
    try:
        yield watch
    finally:
        watch.elapsed_ms = round((time.perf_counter() - start) * 1000)


def exit_status(reports: list[Report]) -> int:
    return EXIT_VIOLATION if any(report.holds is False for report in reports) else EXIT_OK
