"""
Spherical Arcs - Fountain Detection
Counts closure arcs starting and ending at a vertex across a growing family of
finite pieces of an infinite configuration, and turns the growth pattern into a
verdict.
"""
import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence

from spherical_arcs.config import get_settings
from spherical_arcs.models.schemas import FountainVerdict
from spherical_arcs.services.arc_core import Arc
from spherical_arcs.services.configurations import ConfigurationService, Diagram
from spherical_arcs.services.ptolemy_closure import PreconditionError, closure

logger = logging.getLogger(__name__)


@dataclass
class FountainReport:
    w: int
    vertex: int
    depths: List[int]
    left_counts: List[int]
    right_counts: List[int]
    verdict: FountainVerdict

    @property
    def one_sided(self) -> bool:
        """A left or right fountain that is not both; this rules out functorial finiteness."""
        return self.verdict in (FountainVerdict.LEFT_FOUNTAIN, FountainVerdict.RIGHT_FOUNTAIN)


class FountainService:
    """
    Heuristic fountain detection.

    A side grows when its counts strictly increase from the second depth on, and
    is stable when the last two counts agree. The verdict needs at least
    `fountain_min_depths` depths.
    """

    def __init__(self):
        self.settings = get_settings()
        self.configurations = ConfigurationService()

    def family_member(self, diagram: Diagram, depth: int) -> List[Arc]:
        """Arcs of the depth-th finite piece: periods -depth..depth, or depth unfold steps."""
        if diagram.is_periodic:
            return diagram.materialize(depth)
        if diagram.is_sealed:
            return sorted(self.configurations.unfold(diagram, depth).arcs)
        raise PreconditionError("fountain families come from periodic diagrams or sealed windows")

    def verdict(self, left: Sequence[int], right: Sequence[int]) -> FountainVerdict:
        if len(left) < max(self.settings.fountain_min_depths, 3):
            return FountainVerdict.UNKNOWN

        def growing(counts: Sequence[int]) -> bool:
            return all(a < b for a, b in zip(counts[1:], counts[2:]))

        def stable(counts: Sequence[int]) -> bool:
            return counts[-1] == counts[-2]

        if growing(left) and growing(right):
            return FountainVerdict.FOUNTAIN
        if growing(left) and stable(right):
            return FountainVerdict.LEFT_FOUNTAIN
        if growing(right) and stable(left):
            return FountainVerdict.RIGHT_FOUNTAIN
        if stable(left) and stable(right):
            return FountainVerdict.BOUNDED
        return FountainVerdict.UNKNOWN

    def fountain_report(
        self, diagram: Diagram, vertex: int, depths: Optional[Sequence[int]] = None
    ) -> FountainReport:
        """
        Count closure arcs with source vertex (left) and target vertex (right) per depth.

        Raises:
            PreconditionError: If depths are not strictly increasing or the diagram is a free window
        """
        depths = list(self.settings.fountain_default_depths if depths is None else depths)
        if any(d < 0 for d in depths) or any(a >= b for a, b in zip(depths, depths[1:])):
            raise PreconditionError("depths must be nonnegative and strictly increasing")

        left_counts, right_counts = [], []
        for depth in depths:
            arcs = closure(diagram.w, self.family_member(diagram, depth)).arcs
            left_counts.append(sum(1 for a in arcs if a.source == vertex))
            right_counts.append(sum(1 for a in arcs if a.target == vertex))
            logger.debug("fountain depth %s at %s: left %s right %s", depth, vertex, left_counts[-1], right_counts[-1])

        return FountainReport(
            w=diagram.w.w,
            vertex=vertex,
            depths=depths,
            left_counts=left_counts,
            right_counts=right_counts,
            verdict=self.verdict(left_counts, right_counts),
        )


def fountain_report(diagram: Diagram, vertex: int, depths: Optional[Sequence[int]] = None) -> FountainReport:
    return FountainService().fountain_report(diagram, vertex, depths)
