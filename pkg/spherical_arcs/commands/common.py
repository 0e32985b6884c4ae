"""
Spherical Arcs - Shared CLI Helpers
Common flags, argument parsers and report output for the command modules.
"""
import argparse
import json
import sys
from pathlib import Path
from typing import List, Optional, Tuple

from pydantic import BaseModel

from spherical_arcs.services.arc_core import Arc, make_arc
from spherical_arcs.services.configurations import Diagram
from spherical_arcs.services.diagram_io import load_diagram


def common_flags(suppress: bool) -> argparse.ArgumentParser:
    """
    Flags accepted both before and after the subcommand.

    Subcommand copies use SUPPRESS defaults so they only override the top-level
    values when given.
    """
    default = argparse.SUPPRESS if suppress else None
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument("--w", type=int, default=default, help="Calabi-Yau weight w <= -1")
    parent.add_argument("--json", action="store_true", default=argparse.SUPPRESS if suppress else False,
                        help="write machine-readable reports to stdout")
    parent.add_argument("--seed", type=int, default=default, help="accepted for compatibility; all algorithms are deterministic")
    parent.add_argument("--log-level", dest="log_level", default=default, help="override the configured log level")
    return parent


def arc_arg(text: str) -> Arc:
    """Parse 't,u' into an arc."""
    try:
        source, target = (int(part) for part in text.replace("(", "").replace(")", "").split(","))
        return make_arc(source, target)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected 'source,target' with source > target, got {text!r}") from exc


def window_arg(text: str) -> Tuple[int, int]:
    """Parse 'lo..hi'."""
    try:
        lo, hi = (int(part) for part in text.split(".."))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected 'lo..hi', got {text!r}") from exc
    if lo > hi:
        raise argparse.ArgumentTypeError("window lo must not exceed hi")
    return lo, hi


def int_list_arg(text: str) -> List[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from exc


def require_w(args: argparse.Namespace) -> int:
    if args.w is None:
        raise ValueError("this command needs --w")
    return args.w


def load(args: argparse.Namespace, path: str) -> Diagram:
    return load_diagram(path, args.w)


def load_arcs(path: str) -> Tuple[Optional[int], List[Arc]]:
    """Arcs from a diagram document or a bare JSON list of pairs, plus the document's w if any."""
    raw = json.loads(Path(path).read_text(encoding="utf-8"))
    if isinstance(raw, dict):
        return raw.get("w"), [make_arc(s, t) for s, t in raw.get("arcs", [])]
    return None, [make_arc(s, t) for s, t in raw]


def fmt_arcs(arcs) -> str:
    return " ".join(str(a) for a in arcs) or "(none)"


def emit(args: argparse.Namespace, report: BaseModel, text: str) -> None:
    if args.json:
        sys.stdout.write(report.model_dump_json(by_alias=True, indent=2) + "\n")
    else:
        sys.stdout.write(text.rstrip("\n") + "\n")
