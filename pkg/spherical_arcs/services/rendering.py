"""
Spherical Arcs - Rendering Service
Deterministic pictures of diagrams: semicircular arcs over a number line as SVG
(through matplotlib) or as bracket rows over an ASCII ruler.
"""
import io
import logging
from dataclasses import dataclass
from typing import Iterable, List, Optional, Tuple

from matplotlib import patches, rc_context
from matplotlib.figure import Figure

from spherical_arcs.config import get_settings
from spherical_arcs.exceptions import SphericalArcsError
from spherical_arcs.models.schemas import RenderFormat
from spherical_arcs.services.arc_core import Arc, arcs_cross
from spherical_arcs.services.configurations import Diagram, vertex_report

logger = logging.getLogger(__name__)


class RenderRangeError(SphericalArcsError, ValueError):
    """Raised when the vertex range to draw is larger than allowed."""

    def __init__(self, size: int, limit: int):
        self.size = size
        self.limit = limit
        super().__init__(f"cannot render {size} vertices; the limit is {limit}")


@dataclass(frozen=True)
class RenderSpec:
    format: RenderFormat = RenderFormat.SVG
    unit: Optional[int] = None  # pixels per vertex; settings default when unset
    labels: bool = True


SOLID, VIRTUAL, DERIVED = "solid", "virtual", "derived"


def _row_order(item: Tuple[Arc, str]) -> Tuple[int, int, int]:
    arc = item[0]
    return (-arc.length, arc.target, arc.source)


class DiagramRenderer:
    LINE_STYLES = {SOLID: "-", VIRTUAL: "--", DERIVED: ":"}
    ASCII_FILL = {SOLID: "-", VIRTUAL: ".", DERIVED: "."}

    def __init__(self):
        self.settings = get_settings()

    def _layout(self, diagram: Diagram, derived: Iterable[Arc]) -> Tuple[Diagram, int, int, List[Tuple[Arc, str]], List[int]]:
        if diagram.is_periodic:
            diagram = diagram.restrict(-diagram.period, 2 * diagram.period - 1)
        lo, hi = diagram.window.lo, diagram.window.hi
        items = [(a, SOLID) for a in diagram.sorted_arcs]
        virtual = diagram.virtual_overarc
        if virtual is not None:
            items.append((virtual, VIRTUAL))
            lo, hi = lo - 1, hi + 1
        extra = sorted(set(derived) - diagram.arcs, key=lambda a: (a.target, a.source))
        items.extend((a, DERIVED) for a in extra)
        for arc, _ in items:
            lo, hi = min(lo, arc.target), max(hi, arc.source)

        size = hi - lo + 1
        if size > self.settings.render_max_vertices:
            raise RenderRangeError(size, self.settings.render_max_vertices)

        isolated: List[int] = []
        if not any(arcs_cross(a, b) for i, a in enumerate(diagram.sorted_arcs) for b in diagram.sorted_arcs[i + 1:]):
            isolated = vertex_report(diagram).isolated()
        return diagram, lo, hi, items, isolated

    def render(self, diagram: Diagram, spec: RenderSpec = RenderSpec(), derived: Iterable[Arc] = ()) -> bytes:
        """
        Raises:
            RenderRangeError: If the vertex range exceeds render_max_vertices
        """
        diagram, lo, hi, items, isolated = self._layout(diagram, derived)
        if RenderFormat(spec.format) is RenderFormat.ASCII:
            return self._ascii(lo, hi, items, spec.labels).encode("utf-8")
        return self._svg(lo, hi, items, isolated, spec)

    def _svg(self, lo: int, hi: int, items: List[Tuple[Arc, str]], isolated: List[int], spec: RenderSpec) -> bytes:
        unit = spec.unit or self.settings.render_unit
        radius = max((a.length for a, _ in items), default=0) / 2
        width = (hi - lo + 2) * unit / 100
        height = (radius + 1.5) * unit / 100

        fig = Figure(figsize=(width, height), dpi=100)
        ax = fig.add_axes([0, 0, 1, 1])
        ax.set_xlim(lo - 1, hi + 1)
        ax.set_ylim(-1, radius + 0.5)
        ax.set_aspect("equal")
        ax.axis("off")

        ax.plot([lo, hi], [0, 0], color="black", linewidth=1, gid="number-line")
        for v in range(lo, hi + 1):
            ax.plot([v, v], [0, -0.15], color="black", linewidth=0.8)
            if spec.labels:
                ax.text(v, -0.6, str(v), ha="center", va="center", fontsize=8)

        counters = {SOLID: 0, VIRTUAL: 0, DERIVED: 0}
        for arc, kind in items:
            ax.add_patch(patches.Arc(
                ((arc.source + arc.target) / 2, 0),
                arc.length,
                arc.length,
                theta1=0,
                theta2=180,
                linestyle=self.LINE_STYLES[kind],
                linewidth=1.2,
                color="black" if kind == SOLID else "grey",
                gid=f"arc-{kind}-{counters[kind]}",
            ))
            counters[kind] += 1

        if isolated:
            ax.plot(isolated, [0] * len(isolated), linestyle="none", marker="o",
                    markerfacecolor="white", markeredgecolor="black", markersize=4, gid="isolated")

        buffer = io.BytesIO()
        with rc_context({"svg.hashsalt": self.settings.render_hashsalt, "svg.fonttype": "none"}):
            fig.savefig(buffer, format="svg", metadata={"Date": None})
        logger.debug("rendered %d arcs over [%s,%s] as svg", len(items), lo, hi)
        return buffer.getvalue()

    def _ascii(self, lo: int, hi: int, items: List[Tuple[Arc, str]], labels: bool) -> str:
        cell = max(len(str(lo)), len(str(hi))) + 1
        width = (hi - lo) * cell + 1

        def column(v: int) -> int:
            return (v - lo) * cell

        rows = []
        for arc, kind in sorted(items, key=_row_order):
            row = [" "] * width
            left, right = column(arc.target), column(arc.source)
            for i in range(left + 1, right):
                row[i] = self.ASCII_FILL[kind]
            row[left], row[right] = "[", "]"
            rows.append("".join(row).rstrip())

        ruler = ["-"] * width
        for v in range(lo, hi + 1):
            ruler[column(v)] = "+"
        rows.append("".join(ruler))
        if labels:
            rows.append("".join(str(v).ljust(cell) for v in range(lo, hi + 1)).rstrip())
        return "\n".join(rows) + "\n"


def render(diagram: Diagram, spec: RenderSpec = RenderSpec(), derived: Iterable[Arc] = ()) -> bytes:
    return DiagramRenderer().render(diagram, spec, derived)
