"""
Spherical Arcs - Command Line Entry Point
Builds the argument parser from the command modules and maps errors to exit codes.
"""
import argparse
import json
import logging
import sys
from typing import List, Optional

from pydantic import ValidationError

from spherical_arcs import __version__
from spherical_arcs.commands import check, closure, graph, mutate, nc
from spherical_arcs.commands.common import common_flags
from spherical_arcs.config import configure_logging
from spherical_arcs.exceptions import SphericalArcsError, UsageError
from spherical_arcs.models.schemas import ErrorDetail, ErrorReport
from spherical_arcs.services.diagram_io import DiagramParseError

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INPUT_ERROR = 1

COMMAND_MODULES = (check, closure, mutate, graph, nc)


class ArcsArgumentParser(argparse.ArgumentParser):
    """Argument parser that raises UsageError instead of exiting with status 2."""

    def error(self, message: str):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = ArcsArgumentParser(
        prog="spherical-arcs",
        description="Arc-diagram model of negative Calabi-Yau categories.",
        parents=[common_flags(suppress=False)],
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    subparsers = parser.add_subparsers(dest="command", required=True)
    parents = [common_flags(suppress=True)]
    for module in COMMAND_MODULES:
        module.register(subparsers, parents)
    return parser


def _report_error(args: Optional[argparse.Namespace], exc: Exception) -> None:
    details: List[ErrorDetail] = []
    if isinstance(exc, DiagramParseError):
        details = exc.errors
    elif isinstance(exc, ValidationError):
        details = [ErrorDetail(pointer="".join(f"/{p}" for p in e["loc"]), message=e["msg"]) for e in exc.errors()]
    message = exc.message if isinstance(exc, SphericalArcsError) else str(exc)

    if args is not None and getattr(args, "json", False):
        report = ErrorReport(error=message, details=details)
        sys.stdout.write(report.model_dump_json(indent=2) + "\n")
    else:
        sys.stderr.write(f"error: {message}\n")
        for detail in details:
            sys.stderr.write(f"  {detail.pointer or '/'}: {detail.message}\n")


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        flags = sys.argv[1:] if argv is None else argv
        _report_error(argparse.Namespace(json="--json" in flags), exc)
        return EXIT_INPUT_ERROR
    configure_logging(args.log_level)
    logger.debug("running %s", args.command)

    try:
        return args.handler(args)
    except (SphericalArcsError, ValidationError, json.JSONDecodeError, OSError, ValueError) as exc:
        _report_error(args, exc)
        return EXIT_INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
