"""
Spherical Arcs - Diagram I/O
Reading and writing the versioned JSON diagram format. Every problem found while
parsing is reported with a JSON pointer into the document.
"""
import json
import logging
from pathlib import Path
from typing import Dict, List, Optional, Union

from pydantic import ValidationError

from spherical_arcs.config import get_settings
from spherical_arcs.exceptions import SphericalArcsError
from spherical_arcs.models.schemas import Boundary, DiagramDocument, DiagramMode, ErrorDetail, WindowSpec
from spherical_arcs.services.arc_core import Arc, as_weight, crossing_pairs, is_admissible
from spherical_arcs.services.configurations import Diagram, DiagramError, Window

logger = logging.getLogger(__name__)


class DiagramParseError(SphericalArcsError, ValueError):
    """Raised when a diagram document is malformed; `errors` holds pointer/message pairs."""

    def __init__(self, errors: List[ErrorDetail]):
        self.errors = errors
        summary = "; ".join(f"{e.pointer or '/'}: {e.message}" for e in errors)
        super().__init__(f"invalid diagram: {summary}")


def _pointer(loc) -> str:
    return "".join(f"/{part}" for part in loc)


def _semantic_errors(document: DiagramDocument, w: int) -> List[ErrorDetail]:
    errors: List[ErrorDetail] = []
    seen: Dict[Arc, int] = {}
    limit = None
    if document.mode == DiagramMode.PERIODIC:
        limit = get_settings().max_period_length_factor * document.period

    for i, (source, target) in enumerate(document.arcs):
        pointer = f"/arcs/{i}"
        arc = Arc(source, target)
        if source <= target:
            errors.append(ErrorDetail(pointer=pointer, message="source must exceed target"))
            continue
        if arc in seen:
            errors.append(ErrorDetail(pointer=pointer, message=f"duplicate of /arcs/{seen[arc]}"))
            continue
        seen[arc] = i
        if not is_admissible(w, arc):
            errors.append(ErrorDetail(
                pointer=pointer, message=f"arc {arc} of length {arc.length} is not admissible for w={w}",
            ))
        if document.mode == DiagramMode.WINDOW:
            window = document.window
            if not (window.lo <= target and source <= window.hi):
                errors.append(ErrorDetail(
                    pointer=pointer, message=f"arc {arc} leaves the window [{window.lo},{window.hi}]",
                ))
        else:
            if not 0 <= source < document.period:
                errors.append(ErrorDetail(
                    pointer=pointer, message=f"periodic source must lie in [0,{document.period})",
                ))
            if arc.length >= limit:
                errors.append(ErrorDetail(pointer=pointer, message=f"periodic arc must be shorter than {limit}"))
    if errors:
        return errors

    arcs = list(seen)
    if document.mode == DiagramMode.WINDOW and document.window.boundary == Boundary.SEALED:
        for a, b in crossing_pairs(arcs):
            errors.append(ErrorDetail(
                pointer="/arcs", message=f"sealed window arcs {a} (/arcs/{seen[a]}) and {b} (/arcs/{seen[b]}) cross",
            ))
    elif document.mode == DiagramMode.PERIODIC:
        p = document.period
        translates = [(a.shifted(-k * p), k, a) for k in (-1, 0, 1) for a in arcs]
        owner = {t: (k, a) for t, k, a in translates}
        for x, y in crossing_pairs(t for t, _, _ in translates):
            (kx, ax), (ky, ay) = owner[x], owner[y]
            errors.append(ErrorDetail(
                pointer="/arcs",
                message=f"translates {x} (/arcs/{seen[ax]} shifted by {kx}*{p}) and {y} (/arcs/{seen[ay]} shifted by {ky}*{p}) cross",
            ))
    return errors


def parse_diagram(data: Union[bytes, str], default_w: Optional[int] = None) -> Diagram:
    """
    Parse and validate a diagram document.

    Args:
        data: UTF-8 JSON text
        default_w: Weight used when the document has no "w" field

    Returns:
        A validated Diagram

    Raises:
        DiagramParseError: With one pointer/message pair per problem found
    """
    try:
        raw = json.loads(data)
    except (UnicodeDecodeError, json.JSONDecodeError) as exc:
        raise DiagramParseError([ErrorDetail(pointer="", message=f"not valid JSON: {exc}")]) from exc

    try:
        document = DiagramDocument.model_validate(raw)
    except ValidationError as exc:
        raise DiagramParseError([
            ErrorDetail(pointer=_pointer(err["loc"]), message=err["msg"]) for err in exc.errors()
        ]) from exc

    w = document.w if document.w is not None else default_w
    if w is None:
        raise DiagramParseError([ErrorDetail(pointer="/w", message="weight missing; pass --w or add a 'w' field")])
    if w > -1:
        raise DiagramParseError([ErrorDetail(pointer="/w", message="weight must be <= -1")])

    errors = _semantic_errors(document, w)
    if errors:
        raise DiagramParseError(errors)

    arcs = frozenset(Arc(s, t) for s, t in document.arcs)
    try:
        if document.mode == DiagramMode.WINDOW:
            window = Window(document.window.lo, document.window.hi, document.window.boundary)
            diagram = Diagram(as_weight(w), arcs, window=window)
        else:
            diagram = Diagram(as_weight(w), arcs, period=document.period)
    except DiagramError as exc:
        raise DiagramParseError([ErrorDetail(pointer="", message=exc.message)]) from exc

    logger.debug("parsed %s diagram with %d arcs", diagram.mode.value, len(diagram.arcs))
    return diagram


def load_diagram(path: Union[str, Path], default_w: Optional[int] = None) -> Diagram:
    return parse_diagram(Path(path).read_bytes(), default_w)


def to_document(diagram: Diagram) -> DiagramDocument:
    window = None
    if diagram.window is not None:
        window = WindowSpec(lo=diagram.window.lo, hi=diagram.window.hi, boundary=diagram.window.boundary)
    return DiagramDocument(
        w=diagram.w.w,
        mode=diagram.mode,
        window=window,
        period=diagram.period,
        arcs=[a.as_pair() for a in diagram.sorted_arcs],
    )


def serialize_diagram(diagram: Diagram) -> bytes:
    """Inverse of parse_diagram."""
    return to_document(diagram).model_dump_json(exclude_none=True, indent=2).encode("utf-8")
