"""
Spherical Arcs - Approximation Mutation
Left and right mutation of a Hom configuration at one arc through minimal
approximations by the extension closure of the remaining arcs. Each step reads
the arcs e1, e2 and s' of the approximation triangle off the vertex picture.
"""
import logging
from dataclasses import dataclass
from typing import List, Optional

from spherical_arcs.models.schemas import Direction
from spherical_arcs.services.arc_core import Arc
from spherical_arcs.services.configurations import Diagram, vertex_report
from spherical_arcs.services.mutation import MutationError, MutationService, smallest_overarc

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ApproxStep:
    s: Arc
    e1: Optional[Arc]
    e2: Optional[Arc]
    s_prime: Arc
    s_star: Arc
    case: int
    direction: Direction = Direction.LEFT
    bracketed: bool = False


def _reflect(arc: Optional[Arc]) -> Optional[Arc]:
    return arc.reflected() if arc is not None else None


class ApproximationService:
    """Mutation by approximation, iterated mutation and mutation orbits."""

    def __init__(self):
        self.mutation = MutationService()

    def _frame(self, diagram: Diagram, s: Arc):
        """
        Vertices framing s: the inner-isolated vertices of its smallest real overarc,
        or, in a free window without one, the nearest outer-isolated vertices on each side.
        """
        report = vertex_report(diagram)
        overarc = smallest_overarc(diagram, s)
        if overarc is not None:
            return report.inner[overarc], overarc, False, report
        if diagram.is_sealed:
            raise MutationError(f"{s} sits under the virtual overarc only; unfold the window first")
        left = [v for v in report.outer if v < s.target]
        right = [v for v in report.outer if v > s.source]
        if not left or not right:
            raise MutationError(f"{s} has no overarc and no outer-isolated bracket")
        return [left[-1], right[0]], None, True, report

    def _left(self, diagram: Diagram, s: Arc) -> ApproxStep:
        self.mutation._check_input(diagram, s)
        frame, overarc, bracketed, report = self._frame(diagram, s)
        t, u = s.source, s.target
        inner_s = report.inner[s]
        v_prime = inner_s[0] if inner_s else t
        e2 = None if v_prime == u + 1 else Arc(v_prime - 1, u + 1)

        if not frame:
            case = 1
            e1 = Arc(t + 1, u - 1)
            e2 = Arc(t - 1, u + 1) if s.length > 1 else None
            s_prime = Arc(e2.source, e1.target) if e2 else Arc(u, e1.target)
        elif any(v > t for v in frame):
            case = 2
            v = min(v for v in frame if v > t)
            e1 = None if v == t + 1 else Arc(v - 1, t + 1)
            if e1 and e2:
                s_prime = Arc(e1.source, e2.source)
            elif e2:
                s_prime = Arc(t, e2.source)
            elif e1:
                s_prime = Arc(e1.source, u)
            else:
                s_prime = s
        else:
            case = 3
            v = min(frame)
            e1 = Arc(t + 1, overarc.target) if v == overarc.target + 1 else Arc(t + 1, v - 1)
            s_prime = Arc(e2.source, e1.target) if e2 else Arc(u, e1.target)

        s_star = s_prime.shifted(-1)
        logger.debug("left mutation at %s: case %d, s' = %s, s* = %s", s, case, s_prime, s_star)
        return ApproxStep(s, e1, e2, s_prime, s_star, case, Direction.LEFT, bracketed)

    def approx_mutate(self, diagram: Diagram, s: Arc, direction: Direction = Direction.LEFT) -> ApproxStep:
        """
        Mutate at s in the given direction.

        Right mutation is the mirror image of left mutation: the diagram is reflected
        through 0, mutated on the left and the step is reflected back, so there
        s_star is the suspension of s_prime.

        Raises:
            MutationError: If s has no usable frame or the diagram is not a Hom configuration
        """
        if Direction(direction) is Direction.LEFT:
            return self._left(diagram, s)
        step = self._left(diagram.reflected(), s.reflected())
        return ApproxStep(
            s=s,
            e1=_reflect(step.e1),
            e2=_reflect(step.e2),
            s_prime=step.s_prime.reflected(),
            s_star=step.s_star.reflected(),
            case=step.case,
            direction=Direction.RIGHT,
            bracketed=step.bracketed,
        )

    def iterate_mutations(
        self, diagram: Diagram, s: Arc, steps: int, direction: Direction = Direction.LEFT
    ) -> List[ApproxStep]:
        """Mutate repeatedly, replacing the current arc by its mutation after every step."""
        history: List[ApproxStep] = []
        current = s
        for _ in range(steps):
            step = self.approx_mutate(diagram, current, direction)
            history.append(step)
            diagram = diagram.replace(current, step.s_star)
            current = step.s_star
        return history

    def mutation_orbit(self, diagram: Diagram, s: Arc, direction: Direction = Direction.LEFT) -> List[Arc]:
        """The arcs s_0, s_1, ..., s_|w| visited by |w| mutation steps."""
        steps = self.iterate_mutations(diagram, s, diagram.w.size, direction)
        return [s] + [step.s_star for step in steps]


def approx_mutate(diagram: Diagram, s: Arc, direction: Direction = Direction.LEFT) -> ApproxStep:
    return ApproximationService().approx_mutate(diagram, s, direction)


def iterate_mutations(diagram: Diagram, s: Arc, steps: int, direction: Direction = Direction.LEFT) -> List[ApproxStep]:
    return ApproximationService().iterate_mutations(diagram, s, steps, direction)
