# Entry point of the command-line tool.
# Sets up logging and tracing from settings, then dispatches to the sub-commands.
import argparse
import logging
import sys
from collections.abc import Sequence

from opentelemetry import trace
from opentelemetry.sdk.trace import TracerProvider
from opentelemetry.sdk.trace.export import ConsoleSpanExporter, SimpleSpanProcessor

import settings
from commands import dodeca, family, solve, verify
from commands.report import EXIT_USAGE, EXIT_VIOLATION
from errorfn.classify import ClassificationError


def setup_logging() -> None:
    logging.basicConfig(
        format="%(levelname)s | %(name)s | %(message)s",
        level=settings.LOG_LEVEL,
        filename=settings.LOG_FILE or None,
        filemode="a",
    )


def setup_tracing() -> None:
    provider = TracerProvider()
    if settings.TRACE_CONSOLE:
        provider.add_span_processor(SimpleSpanProcessor(ConsoleSpanExporter(out=sys.stderr)))
    trace.set_tracer_provider(provider)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="subcubic-fvs",
        description="Exact feedback vertex set bounds for subcubic graphs.",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)
    for command in (solve, family, verify, dodeca):
        command.register(subparsers)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ClassificationError as e:
        logging.error(f"{args.command}: {e}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_VIOLATION
    except (ValueError, OSError) as e:
        logging.error(f"{args.command}: {e}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    setup_logging()
    setup_tracing()
    sys.exit(main())
