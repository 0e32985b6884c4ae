"""
Spherical Arcs - Ptolemy Closure Service
Ptolemy arcs of strictly crossing and neighbouring pairs, extension closures as
fixpoints with stratification levels, and the isolated-vertex split check.
"""
import logging
from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, FrozenSet, Iterable, List, Optional, Tuple

from spherical_arcs.exceptions import SphericalArcsError
from spherical_arcs.models.schemas import ClosurePolicy, PtolemyClass, Recursion, RelationKind
from spherical_arcs.services.arc_core import (
    Arc,
    Weight,
    WeightLike,
    as_weight,
    is_admissible,
    relate,
    require_admissible,
    sort_arcs,
)
from spherical_arcs.services.hom_calculus import CROSSING_CASES, NEIGHBOURING_CASES, ext1

logger = logging.getLogger(__name__)


class PreconditionError(SphericalArcsError, ValueError):
    """Raised when an operation's input does not meet its precondition."""


@dataclass(frozen=True)
class PtolemyArc:
    arc: Arc
    ptolemy_class: PtolemyClass
    parents: Tuple[Arc, Arc]


@dataclass
class ClosureResult:
    """Arcs of an extension closure with the level at which each first appears."""

    arcs: FrozenSet[Arc]
    level: Dict[Arc, int]
    policy: ClosurePolicy
    recursion: Recursion = Recursion.LEFT
    parents: Dict[Arc, Tuple[Arc, Arc]] = field(default_factory=dict)

    @property
    def depth(self) -> int:
        return max(self.level.values(), default=0)

    def at_level(self, n: int) -> List[Arc]:
        return sort_arcs(a for a, lvl in self.level.items() if lvl == n)

    def derived(self) -> List[Arc]:
        return sort_arcs(a for a, lvl in self.level.items() if lvl > 1)


def ptolemy_arcs(w: WeightLike, a: Arc, b: Arc) -> List[PtolemyArc]:
    """
    Ptolemy arcs of a pair.

    Strictly crossing pairs give the admissible members of the four reconnections
    of their endpoints (class I). Neighbouring pairs give one class II arc per
    distance-1 witness, joining the two endpoints left over.
    """
    weight = as_weight(w)
    relation = relate(a, b)
    found: List[PtolemyArc] = []

    if relation.kind is RelationKind.STRICT_CROSS:
        vertices = sorted((a.source, a.target, b.source, b.target))
        for low, high in combinations(vertices, 2):
            candidate = Arc(high, low)
            if candidate in (a, b):
                continue
            if is_admissible(weight, candidate):
                found.append(PtolemyArc(candidate, PtolemyClass.I, (a, b)))
    elif relation.neighbouring:
        for x, y in relation.witnesses:
            rest_a = a.source if x == a.target else a.target
            rest_b = b.source if y == b.target else b.target
            candidate = Arc(max(rest_a, rest_b), min(rest_a, rest_b))
            found.append(PtolemyArc(candidate, PtolemyClass.II, (a, b)))

    found.sort(key=lambda p: (p.arc.target, p.arc.source))
    return found


def extension_middle(w: WeightLike, b: Arc, a: Arc) -> Tuple[Arc, ...]:
    """Middle-term summands of the nonsplit triangle a -> e -> b (empty when there is none)."""
    return ext1(w, b, a).middle


class ClosureService:
    """
    Extension closures computed as Ptolemy fixpoints.

    Levels follow the recursion (X)_n = X * (X)_{n-1} (or its mirror): a new arc
    at level n is a middle-term summand of an extension between an input arc and
    an arc of level n - 1. Once that saturation stalls, an unrestricted pass over
    all pairs makes sure the arc set is the least Ptolemy fixpoint.
    """

    def closure(
        self,
        w: WeightLike,
        arcs: Iterable[Arc],
        policy: ClosurePolicy = ClosurePolicy.BOTH,
        recursion: Recursion = Recursion.LEFT,
    ) -> ClosureResult:
        weight = as_weight(w)
        policy = ClosurePolicy(policy)
        recursion = Recursion(recursion)
        base = sort_arcs(set(arcs))
        for arc in base:
            require_admissible(weight, arc)

        level: Dict[Arc, int] = {arc: 1 for arc in base}
        parents: Dict[Arc, Tuple[Arc, Arc]] = {}
        allowed = NEIGHBOURING_CASES if policy is ClosurePolicy.CLASS_II_ONLY else NEIGHBOURING_CASES | CROSSING_CASES

        start = 2
        while True:
            self._saturate(weight, base, level, parents, allowed, recursion, start)
            extra = self._unrestricted_pass(weight, level, policy)
            if not extra:
                break
            logger.debug("unrestricted pass added %d arcs", len(extra))
            for arc, (lvl, pair) in extra.items():
                level[arc] = lvl
                parents[arc] = pair
            start = min(lvl for lvl, _ in extra.values()) + 1

        logger.debug(
            "closure w=%s policy=%s: %d input arcs -> %d arcs, depth %d",
            weight.w, policy.value, len(base), len(level), max(level.values(), default=0),
        )
        return ClosureResult(frozenset(level), level, policy, recursion, parents)

    def _saturate(
        self,
        weight: Weight,
        base: List[Arc],
        level: Dict[Arc, int],
        parents: Dict[Arc, Tuple[Arc, Arc]],
        allowed: FrozenSet,
        recursion: Recursion,
        start: int,
    ) -> None:
        n = start
        while n - 1 <= max(level.values(), default=0):
            frontier = sort_arcs(arc for arc, lvl in level.items() if lvl == n - 1)
            fresh: Dict[Arc, Tuple[Arc, Arc]] = {}
            for x in base:
                for y in frontier:
                    if recursion is Recursion.LEFT:
                        # x -> e -> y with x an input arc
                        answer = ext1(weight, y, x, check=False)
                    else:
                        # y -> e -> x with x an input arc
                        answer = ext1(weight, x, y, check=False)
                    if answer.case_tag not in allowed:
                        continue
                    for middle in answer.middle:
                        if middle not in level and middle not in fresh:
                            fresh[middle] = (x, y)
            for arc, pair in fresh.items():
                level[arc] = n
                parents[arc] = pair
            n += 1

    def _unrestricted_pass(
        self,
        weight: Weight,
        level: Dict[Arc, int],
        policy: ClosurePolicy,
    ) -> Dict[Arc, Tuple[int, Tuple[Arc, Arc]]]:
        current = sort_arcs(level)
        extra: Dict[Arc, Tuple[int, Tuple[Arc, Arc]]] = {}
        for i, a in enumerate(current):
            for b in current[i + 1:]:
                for ptolemy in ptolemy_arcs(weight, a, b):
                    if policy is ClosurePolicy.CLASS_II_ONLY and ptolemy.ptolemy_class is not PtolemyClass.II:
                        continue
                    if ptolemy.arc in level:
                        continue
                    candidate_level = 1 + max(level[a], level[b])
                    known = extra.get(ptolemy.arc)
                    if known is None or candidate_level < known[0]:
                        extra[ptolemy.arc] = (candidate_level, (a, b))
        return extra

    def split_check(self, w: WeightLike, arcs: Iterable[Arc], v: int) -> bool:
        """
        Check that an outer-isolated vertex splits the closure.

        Returns:
            True when the closure equals the union of the closures of the arcs left
            and right of v, and v stays isolated in the closure

        Raises:
            PreconditionError: If v is an endpoint of an input arc or lies under one
        """
        weight = as_weight(w)
        arcs = set(arcs)
        blocking = sort_arcs(a for a in arcs if a.touches(v) or a.spans(v))
        if blocking:
            raise PreconditionError(
                f"vertex {v} is not outer-isolated: blocked by {', '.join(map(str, blocking))}"
            )

        left = [a for a in arcs if a.source < v]
        right = [a for a in arcs if a.target > v]
        whole = self.closure(weight, arcs).arcs
        parts = self.closure(weight, left).arcs | self.closure(weight, right).arcs
        isolated = not any(a.touches(v) for a in whole)
        return whole == parts and isolated


def closure(
    w: WeightLike,
    arcs: Iterable[Arc],
    policy: ClosurePolicy = ClosurePolicy.BOTH,
    recursion: Recursion = Recursion.LEFT,
) -> ClosureResult:
    """Module-level shortcut for ClosureService().closure."""
    return ClosureService().closure(w, arcs, policy, recursion)


def split_check(w: WeightLike, arcs: Iterable[Arc], v: int) -> bool:
    return ClosureService().split_check(w, arcs, v)


def closure_parents(result: ClosureResult, arc: Arc) -> Optional[Tuple[Arc, Arc]]:
    return result.parents.get(arc)
