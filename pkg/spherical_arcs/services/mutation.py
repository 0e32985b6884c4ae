"""
Spherical Arcs - Mutation Service
Completions of a configuration at one arc: the constructive fan read off the
isolated vertices, and a brute-force oracle over candidate arcs.
"""
import logging
from dataclasses import dataclass
from typing import FrozenSet, List, Optional, Tuple

from spherical_arcs.exceptions import SphericalArcsError
from spherical_arcs.models.schemas import Boundary, ConfigClassValue, FanMethod
from spherical_arcs.services.arc_core import Arc, WeightLike, admissible_arcs, arcs_cross, as_weight, sort_arcs
from spherical_arcs.services.configurations import (
    ConfigurationService,
    Diagram,
    VertexReport,
    vertex_report,
)
from spherical_arcs.services.ptolemy_closure import PreconditionError

logger = logging.getLogger(__name__)


class MutationError(SphericalArcsError, ValueError):
    """Raised when a diagram cannot be mutated at the requested arc."""


@dataclass(frozen=True)
class MutationFan:
    at: Arc
    completions: FrozenSet[Arc]
    method: FanMethod

    @property
    def proper_replacements(self) -> List[Arc]:
        return sort_arcs(self.completions - {self.at})

    @property
    def sorted_completions(self) -> List[Arc]:
        return sort_arcs(self.completions)


def smallest_overarc(diagram: Diagram, s: Arc) -> Optional[Arc]:
    """The shortest arc of the diagram strictly covering s, if any."""
    covering = [a for a in diagram.arcs if a.covers(s)]
    return min(covering, key=lambda a: a.length) if covering else None


class MutationService:
    """Completion fans of window diagrams."""

    def __init__(self):
        self.configurations = ConfigurationService()

    def _check_input(self, diagram: Diagram, s: Arc) -> None:
        if diagram.is_periodic:
            raise PreconditionError("mutation works on windows; restrict the periodic diagram first")
        if s not in diagram.arcs:
            raise MutationError(f"arc {s} is not in the diagram")
        value = self.configurations.classify(diagram, homological=False).value
        if not value.at_least(ConfigClassValue.HOM_CONFIG):
            raise MutationError(f"diagram is {value.value}, mutation needs a Hom configuration")

    def completions_at(self, diagram: Diagram, s: Arc) -> MutationFan:
        """
        Constructive completions at s.

        Under a real or virtual overarc the 2|w| isolated vertices x_1 < ... < x_2|w|
        left after removing s pair up as (x_{|w|+i}, x_i). An outer-arc of a free window
        with k outer-isolated vertices has k + 1 completions, pairing the outer-isolated
        vertices with the endpoints and inner-isolated vertices of s.

        Raises:
            MutationError: If s is not in the diagram or the diagram is not a Hom configuration
        """
        self._check_input(diagram, s)
        n = diagram.w.size
        overarc = smallest_overarc(diagram, s) or diagram.virtual_overarc
        rest = vertex_report(diagram.without(s))

        if overarc is not None:
            xs = rest.virtual_inner if overarc == diagram.virtual_overarc else rest.inner[overarc]
            if len(xs) != 2 * n:
                raise MutationError(f"expected {2 * n} isolated vertices under {overarc}, found {len(xs)}")
            completions = {Arc(xs[n + i], xs[i]) for i in range(n)}
        else:
            completions = self._outer_arc_completions(diagram, s, vertex_report(diagram))

        logger.debug("fan at %s: %d completions", s, len(completions))
        return MutationFan(s, frozenset(completions), FanMethod.CONSTRUCTIVE)

    def _outer_arc_completions(self, diagram: Diagram, s: Arc, report: VertexReport) -> set:
        n = diagram.w.size
        v = report.outer
        k = len(v)
        x = [s.target] + report.inner[s] + [s.source]  # x[0] = t(s), x[n] = s(s)
        j = sum(1 for vertex in v if vertex < s.target)

        completions = {s}
        # 1-based v_i is v[i - 1]
        for i in range(1, j + 1):
            completions.add(Arc(x[n - i], v[j - i]))
        for i in range(1, k - j + 1):
            completions.add(Arc(v[j + i - 1], x[i]))
        return completions

    def brute_force_completions(self, diagram: Diagram, s: Arc) -> MutationFan:
        """Every admissible arc between isolated vertices of D without s that keeps a Hom configuration."""
        self._check_input(diagram, s)
        rest = diagram.without(s)
        isolated = set(vertex_report(rest).isolated())
        window = diagram.window

        completions = set()
        for c in admissible_arcs(diagram.w, window.lo, window.hi):
            if c.source not in isolated or c.target not in isolated:
                continue
            if any(arcs_cross(c, a) for a in rest.arcs):
                continue
            value = self.configurations.classify(rest.with_arcs(rest.arcs | {c})).value
            if value.at_least(ConfigClassValue.HOM_CONFIG):
                completions.add(c)
        return MutationFan(s, frozenset(completions), FanMethod.ORACLE)


def outer_arc_witness(w: WeightLike, outer_count: int) -> Tuple[Diagram, Arc]:
    """
    A free-window Riedtmann configuration of minimal arcs with the given number of
    outer-isolated vertices, and an outer-arc with exactly that many proper replacements.
    """
    weight = as_weight(w)
    n, l = weight.size, outer_count
    if not 0 <= l <= n - 1:
        raise PreconditionError(f"outer-isolated count must lie in [0,{n - 1}]")
    s = Arc(n, 0)
    arcs = [s, Arc(2 * n + l + 1, n + l + 1)]
    return Diagram.in_window(weight, 0, 2 * n + l + 1, arcs, Boundary.FREE), s


def completions_at(diagram: Diagram, s: Arc) -> MutationFan:
    return MutationService().completions_at(diagram, s)


def brute_force_completions(diagram: Diagram, s: Arc) -> MutationFan:
    return MutationService().brute_force_completions(diagram, s)
