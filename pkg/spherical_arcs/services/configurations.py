"""
Spherical Arcs - Configurations Service
Finite presentations of arc configurations (windows and periodic diagrams),
vertex classification and the class checkers for orthogonal collections,
Hom configurations, Riedtmann configurations and simple-minded systems.
"""
import logging
import math
from dataclasses import dataclass, field, replace as dc_replace
from typing import Dict, FrozenSet, Iterable, List, Optional, Tuple

from spherical_arcs.config import get_settings
from spherical_arcs.exceptions import SphericalArcsError
from spherical_arcs.models.schemas import Boundary, ConfigClassValue, DiagramMode, VertexKind
from spherical_arcs.services.arc_core import (
    Arc,
    Weight,
    WeightLike,
    admissible_arcs,
    as_weight,
    crossing_pairs,
    endpoint_distance,
    is_admissible,
    minimal_arcs,
    sort_arcs,
)
from spherical_arcs.services.hom_calculus import ext_dim, hom_dim
from spherical_arcs.services.ptolemy_closure import PreconditionError, closure

logger = logging.getLogger(__name__)


class DiagramError(SphericalArcsError, ValueError):
    """Raised when a diagram violates its structural invariants."""


class CrossingError(DiagramError):
    """Raised when an operation needs a crossing-free diagram."""

    def __init__(self, pair: Tuple[Arc, Arc], message: str = None):
        self.pair = pair
        super().__init__(message or f"arcs {pair[0]} and {pair[1]} cross")


# ============================================
# Diagrams
# ============================================

@dataclass(frozen=True)
class Window:
    lo: int
    hi: int
    boundary: Boundary = Boundary.FREE

    def __post_init__(self):
        if self.lo > self.hi:
            raise DiagramError(f"window lo={self.lo} exceeds hi={self.hi}")

    @property
    def span(self) -> int:
        """Number of vertices in the window."""
        return self.hi - self.lo + 1

    @property
    def sealed(self) -> bool:
        return Boundary(self.boundary) is Boundary.SEALED

    def contains(self, arc: Arc) -> bool:
        return self.lo <= arc.target and arc.source <= self.hi

    def vertices(self) -> range:
        return range(self.lo, self.hi + 1)


@dataclass(frozen=True)
class Diagram:
    """
    A finite presentation of an arc configuration.

    Window diagrams hold their arcs literally. Periodic diagrams hold one arc per
    translate class, with sources in [0, period); the configuration is the union
    of all translates by multiples of the period.
    """

    w: Weight
    arcs: FrozenSet[Arc]
    window: Optional[Window] = None
    period: Optional[int] = None

    def __post_init__(self):
        object.__setattr__(self, "w", as_weight(self.w))
        object.__setattr__(self, "arcs", frozenset(Arc(*a) for a in self.arcs))
        if (self.window is None) == (self.period is None):
            raise DiagramError("a diagram has exactly one of window or period")
        for arc in self.arcs:
            if arc.source <= arc.target:
                raise DiagramError(f"arc {arc}: source must exceed target")
            if not is_admissible(self.w, arc):
                raise DiagramError(f"arc {arc} is not admissible for w={self.w.w}")
        if self.window is not None:
            self._check_window()
        else:
            self._check_periodic()

    def _check_window(self) -> None:
        for arc in self.arcs:
            if not self.window.contains(arc):
                raise DiagramError(f"arc {arc} leaves the window [{self.window.lo},{self.window.hi}]")
        if self.window.sealed:
            pairs = crossing_pairs(self.arcs)
            if pairs:
                raise CrossingError(pairs[0], f"sealed window arcs {pairs[0][0]} and {pairs[0][1]} cross")

    def _check_periodic(self) -> None:
        if self.period < 1:
            raise DiagramError("period must be at least 1")
        limit = get_settings().max_period_length_factor * self.period
        for arc in self.arcs:
            if not 0 <= arc.source < self.period:
                raise DiagramError(f"periodic arc {arc} must have its source in [0,{self.period})")
            if arc.length >= limit:
                raise DiagramError(f"periodic arc {arc} is not shorter than {limit}")
        pairs = crossing_pairs(self.materialize(1))
        if pairs:
            raise CrossingError(pairs[0], f"translates {pairs[0][0]} and {pairs[0][1]} cross")

    # ---- constructors ----

    @classmethod
    def in_window(
        cls, w: WeightLike, lo: int, hi: int, arcs: Iterable = (), boundary: Boundary = Boundary.FREE
    ) -> "Diagram":
        return cls(as_weight(w), frozenset(Arc(*a) for a in arcs), window=Window(lo, hi, Boundary(boundary)))

    @classmethod
    def periodic(cls, w: WeightLike, period: int, arcs: Iterable = ()) -> "Diagram":
        return cls(as_weight(w), frozenset(Arc(*a) for a in arcs), period=period)

    # ---- shape ----

    @property
    def mode(self) -> DiagramMode:
        return DiagramMode.WINDOW if self.window is not None else DiagramMode.PERIODIC

    @property
    def is_periodic(self) -> bool:
        return self.period is not None

    @property
    def is_sealed(self) -> bool:
        return self.window is not None and self.window.sealed

    @property
    def sorted_arcs(self) -> List[Arc]:
        return sort_arcs(self.arcs)

    @property
    def virtual_overarc(self) -> Optional[Arc]:
        """The wrap arc (hi+1, lo-1) standing above a sealed window."""
        if not self.is_sealed:
            return None
        return Arc(self.window.hi + 1, self.window.lo - 1)

    def key(self) -> Tuple[Tuple[int, int], ...]:
        return tuple(a.as_pair() for a in self.sorted_arcs)

    def materialize(self, copies: int) -> List[Arc]:
        """Translates of a periodic diagram by k * period for |k| <= copies."""
        if not self.is_periodic:
            return self.sorted_arcs
        return sort_arcs(
            a.shifted(-k * self.period) for k in range(-copies, copies + 1) for a in self.arcs
        )

    def restrict(self, lo: int, hi: int) -> "Diagram":
        """Free window on [lo, hi] holding every arc of the configuration inside it."""
        if self.is_periodic:
            first = (lo - self.period) // self.period - 1
            last = hi // self.period + 1
            candidates = [a.shifted(-k * self.period) for k in range(first, last + 1) for a in self.arcs]
        else:
            candidates = list(self.arcs)
        window = Window(lo, hi, Boundary.FREE)
        return Diagram(self.w, frozenset(a for a in candidates if window.contains(a)), window=window)

    # ---- editing ----

    def with_arcs(self, arcs: Iterable[Arc]) -> "Diagram":
        return dc_replace(self, arcs=frozenset(arcs))

    def without(self, s: Arc) -> "Diagram":
        return self.with_arcs(self.arcs - {s})

    def replace(self, s: Arc, c: Arc) -> "Diagram":
        return self.with_arcs((self.arcs - {s}) | {c})

    def reflected(self) -> "Diagram":
        """Mirror through vertex 0."""
        if self.is_periodic:
            arcs = []
            for a in self.arcs:
                r = a.reflected()
                arcs.append(r.shifted((r.source // self.period) * self.period))
            return Diagram(self.w, frozenset(arcs), period=self.period)
        window = Window(-self.window.hi, -self.window.lo, self.window.boundary)
        return Diagram(self.w, frozenset(a.reflected() for a in self.arcs), window=window)


# ============================================
# Vertex classification
# ============================================

@dataclass(frozen=True)
class VertexStatus:
    vertex: int
    kind: VertexKind
    arc: Optional[Arc] = None  # the endpoint's arc, or the smallest overarc of an inner-isolated vertex


@dataclass
class VertexReport:
    statuses: List[VertexStatus]
    inner: Dict[Arc, List[int]]
    outer: List[int]
    sealed: bool = False

    @property
    def virtual_inner(self) -> List[int]:
        """Outer-isolated vertices of a sealed window, read as inner-isolated under the wrap."""
        return list(self.outer) if self.sealed else []

    def smallest_overarc(self, vertex: int) -> Optional[Arc]:
        for status in self.statuses:
            if status.vertex == vertex:
                return status.arc if status.kind is VertexKind.INNER_ISOLATED else None
        return None

    def isolated(self) -> List[int]:
        return [s.vertex for s in self.statuses if s.kind is not VertexKind.ENDPOINT]


def _periodic_copies(diagram: Diagram) -> int:
    longest = max((a.length for a in diagram.arcs), default=0)
    return math.ceil(longest / diagram.period) + get_settings().periodic_context_periods


def _require_crossing_free(arcs: Iterable[Arc]) -> None:
    pairs = crossing_pairs(arcs)
    if pairs:
        raise CrossingError(pairs[0])


def _sweep(arcs: List[Arc], lo: int, hi: int) -> Tuple[List[VertexStatus], Dict[Arc, List[int]], List[int]]:
    by_target = {a.target: a for a in arcs}
    by_source = {a.source: a for a in arcs}
    start = min([lo] + [a.target for a in arcs])

    statuses: List[VertexStatus] = []
    inner: Dict[Arc, List[int]] = {a: [] for a in arcs}
    outer: List[int] = []
    stack: List[Arc] = []

    for v in range(start, hi + 1):
        if v in by_target:
            arc = by_target[v]
            stack.append(arc)
            status = VertexStatus(v, VertexKind.ENDPOINT, arc)
        elif v in by_source:
            arc = by_source[v]
            if arc in stack:
                stack.remove(arc)
            status = VertexStatus(v, VertexKind.ENDPOINT, arc)
        elif stack:
            inner[stack[-1]].append(v)
            status = VertexStatus(v, VertexKind.INNER_ISOLATED, stack[-1])
        else:
            status = VertexStatus(v, VertexKind.OUTER_ISOLATED)
            if v >= lo:
                outer.append(v)
        if v >= lo:
            statuses.append(status)
    return statuses, inner, outer


def vertex_report(diagram: Diagram) -> VertexReport:
    """
    Classify vertices and collect inner-isolated sets per arc.

    Periodic diagrams are swept over enough translates that every vertex of
    [0, period) sees all arcs covering it; the report covers that fundamental
    domain and the arcs with sources in it.

    Raises:
        CrossingError: If two arcs cross
    """
    if diagram.is_periodic:
        copies = _periodic_copies(diagram)
        arcs = diagram.materialize(copies)
        _require_crossing_free(arcs)
        statuses, inner, _ = _sweep(arcs, -copies * diagram.period, (copies + 1) * diagram.period - 1)
        central = [s for s in statuses if 0 <= s.vertex < diagram.period]
        outer = [s.vertex for s in central if s.kind is VertexKind.OUTER_ISOLATED]
        return VertexReport(central, {a: inner[a] for a in diagram.sorted_arcs}, outer)

    arcs = diagram.sorted_arcs
    _require_crossing_free(arcs)
    statuses, inner, outer = _sweep(arcs, diagram.window.lo, diagram.window.hi)
    return VertexReport(statuses, inner, outer, sealed=diagram.is_sealed)


def classify_vertices(diagram: Diagram) -> List[VertexStatus]:
    return vertex_report(diagram).statuses


# ============================================
# Homological checks
# ============================================

@dataclass
class OrthogonalityReport:
    passed: bool
    crossing_free: bool
    agrees: bool
    pairs_checked: int
    failures: List[str] = field(default_factory=list)


def default_bound(diagram: Diagram) -> int:
    """Span of the diagram plus the configured padding in periods of |w|+1."""
    padding = get_settings().homological_bound_padding_periods * diagram.w.modulus
    if diagram.is_periodic:
        longest = max((a.length for a in diagram.arcs), default=0)
        return longest + diagram.period + padding
    return diagram.window.span + padding


def _context_arcs(diagram: Diagram, bound: int) -> Tuple[List[Arc], List[Arc]]:
    """(arcs to test from, arcs to test against) for pairwise checks."""
    if diagram.is_periodic:
        copies = math.ceil(bound / diagram.period) + _periodic_copies(diagram)
        return diagram.sorted_arcs, diagram.materialize(copies)
    return diagram.sorted_arcs, diagram.sorted_arcs


def check_orthogonal_homological(diagram: Diagram, bound: Optional[int] = None) -> OrthogonalityReport:
    """
    Check w-orthogonality through Hom and Ext dimensions.

    Hom(x, y) must be one-dimensional exactly when x = y, and Ext^k must vanish for
    every w+1 <= k <= -1, on all pairs whose endpoints come within the bound. The
    verdict is compared with the arc criterion (crossing-freeness).
    """
    w = diagram.w
    bound = default_bound(diagram) if bound is None else bound
    central, context = _context_arcs(diagram, bound)
    failures: List[str] = []
    checked = 0

    for x in central:
        for y in context:
            if x != y and endpoint_distance(x, y) > bound:
                continue
            checked += 1
            expected = 1 if x == y else 0
            for first, second in ((x, y), (y, x)):
                got = hom_dim(w, first, second, check=False)
                if got != expected:
                    failures.append(f"dim Hom({first},{second}) = {got}, expected {expected}")
                for k in range(w.w + 1, 0):
                    if ext_dim(w, k, first, second, check=False):
                        failures.append(f"Ext^{k}({first},{second}) != 0")
                if x == y:
                    break

    crossing_free = not crossing_pairs(context)
    passed = not failures
    return OrthogonalityReport(passed, crossing_free, passed == crossing_free, checked, failures)


def riedtmann_witnesses(diagram: Diagram, bound: Optional[int] = None) -> List[Arc]:
    """
    Test arcs orthogonal to the whole diagram for Ext^k, w+1 <= k <= 0.

    A nonempty result shows the diagram fails the no-orthogonal-object condition
    locally. Only arcs inside the window (or near the fundamental domain of a
    periodic diagram) are tried.
    """
    w = diagram.w
    bound = default_bound(diagram) if bound is None else bound
    _, context = _context_arcs(diagram, bound)
    if diagram.is_periodic:
        candidates = [a for a in admissible_arcs(w, 0, diagram.period + bound) if a.target < diagram.period]
    else:
        candidates = admissible_arcs(w, diagram.window.lo, diagram.window.hi)

    present = set(context)
    witnesses = []
    for x in candidates:
        if x in present:
            continue
        if all(
            not ext_dim(w, k, x, s, check=False) and not ext_dim(w, k, s, x, check=False)
            for s in context
            for k in range(w.w + 1, 1)
        ):
            witnesses.append(x)
    return witnesses


# ============================================
# Classification
# ============================================

@dataclass
class Violation:
    code: str
    message: str
    arcs: List[Arc] = field(default_factory=list)
    vertices: List[int] = field(default_factory=list)


@dataclass
class ConfigClass:
    value: ConfigClassValue
    violations: List[Violation] = field(default_factory=list)
    vertices: Optional[VertexReport] = None
    orthogonality: Optional[OrthogonalityReport] = None

    def at_least(self, other: ConfigClassValue) -> bool:
        return self.value.at_least(other)


class ConfigurationService:
    """Classifies diagrams against the arc criteria, strongest class first reported."""

    def __init__(self):
        self.settings = get_settings()

    def classify(
        self, diagram: Diagram, bound: Optional[int] = None, homological: bool = True
    ) -> ConfigClass:
        w = diagram.w
        n = w.size
        violations: List[Violation] = []

        arcs = diagram.materialize(_periodic_copies(diagram)) if diagram.is_periodic else diagram.sorted_arcs
        pairs = crossing_pairs(arcs)
        if pairs:
            for a, b in pairs:
                violations.append(Violation("crossing", f"arcs {a} and {b} cross", [a, b]))
            return ConfigClass(ConfigClassValue.INVALID, violations)

        orthogonality = None
        if homological:
            orthogonality = check_orthogonal_homological(diagram, bound)
            if not orthogonality.passed:
                for failure in orthogonality.failures:
                    violations.append(Violation("homological", failure))
                return ConfigClass(ConfigClassValue.INVALID, violations, orthogonality=orthogonality)

        report = vertex_report(diagram)
        value = ConfigClassValue.ORTHOGONAL

        hom_ok = True
        for arc, inner in report.inner.items():
            if len(inner) != n - 1:
                hom_ok = False
                violations.append(Violation(
                    "inner_isolated_count",
                    f"arc {arc} has {len(inner)} inner-isolated vertices, expected {n - 1}",
                    [arc], list(inner),
                ))
        outer = report.outer
        outer_cap = 0 if diagram.is_periodic else n
        if len(outer) > outer_cap:
            hom_ok = False
            violations.append(Violation(
                "outer_isolated_excess",
                f"{len(outer)} outer-isolated vertices, at most {outer_cap} allowed",
                vertices=list(outer),
            ))

        if hom_ok:
            value = ConfigClassValue.HOM_CONFIG
            if len(outer) <= n - 1:
                value = ConfigClassValue.RIEDTMANN
            else:
                violations.append(Violation(
                    "riedtmann_outer_isolated",
                    f"{len(outer)} outer-isolated vertices, a Riedtmann configuration has at most {n - 1}",
                    vertices=list(outer),
                ))

        if value is ConfigClassValue.RIEDTMANN:
            if not diagram.is_sealed:
                violations.append(Violation(
                    "outer_arcs",
                    "only sealed windows give every arc an overarc",
                ))
            elif len(outer) != n - 1:
                violations.append(Violation(
                    "sealed_outer_isolated",
                    f"sealed window needs exactly {n - 1} outer-isolated vertices, found {len(outer)}",
                    vertices=list(outer),
                ))
            else:
                value = ConfigClassValue.SMS

        logger.debug("classified %s arcs for w=%s as %s", len(diagram.arcs), w.w, value.value)
        return ConfigClass(value, violations, report, orthogonality)

    def is_sealed_valid(self, diagram: Diagram) -> bool:
        if not diagram.is_sealed:
            return False
        n, m = diagram.w.size, diagram.w.modulus
        if diagram.window.span % m != (n - 1) % m:
            return False
        return self.classify(diagram, homological=False).value is ConfigClassValue.SMS

    def require_sealed_valid(self, diagram: Diagram) -> None:
        if not diagram.is_sealed:
            raise PreconditionError("operation needs a sealed window")
        if not self.is_sealed_valid(diagram):
            raise DiagramError("sealed window is not a simple-minded system with a valid wrap")

    def unfold(self, diagram: Diagram, depth: int) -> Diagram:
        """
        Grow a sealed-valid window by wrapping it depth times.

        Each step adds the arc (hi+1, lo-1) and extends the window to [lo-1, hi+|w|],
        which leaves |w|-1 fresh outer-isolated vertices on the right.
        """
        self.require_sealed_valid(diagram)
        if depth < 0:
            raise PreconditionError("unfold depth must be nonnegative")
        n = diagram.w.size
        arcs = set(diagram.arcs)
        lo, hi = diagram.window.lo, diagram.window.hi
        for _ in range(depth):
            arcs.add(Arc(hi + 1, lo - 1))
            lo, hi = lo - 1, hi + n
        return Diagram(diagram.w, frozenset(arcs), window=Window(lo, hi, Boundary.SEALED))

    def uncovered_minimal_arcs(self, diagram: Diagram) -> List[Arc]:
        """
        Minimal arcs in the safe interior missing from the closure of the shifted diagram.

        The generators are the window arcs, together with the virtual overarc for
        sealed windows, shifted by Sigma^i for w+1 <= i <= 0.

        Raises:
            PreconditionError: For periodic diagrams (restrict them first)
            DiagramError: For sealed windows that are not sealed-valid
        """
        if diagram.is_periodic:
            raise PreconditionError("minimal arc coverage needs a window; restrict the periodic diagram first")
        w = diagram.w
        generators = list(diagram.arcs)
        if diagram.is_sealed:
            self.require_sealed_valid(diagram)
            generators.append(diagram.virtual_overarc)

        shifted = {g.shifted(i) for g in generators for i in range(w.w + 1, 1)}
        closed = closure(w, shifted).arcs
        lo, hi = diagram.window.lo + w.size, diagram.window.hi - w.size
        return [a for a in minimal_arcs(w, lo, hi) if a not in closed]

    def minimal_arc_coverage(self, diagram: Diagram) -> bool:
        return not self.uncovered_minimal_arcs(diagram)


def classify_configuration(diagram: Diagram, bound: Optional[int] = None, homological: bool = True) -> ConfigClass:
    return ConfigurationService().classify(diagram, bound, homological)


def is_sealed_valid(diagram: Diagram) -> bool:
    return ConfigurationService().is_sealed_valid(diagram)


def unfold(diagram: Diagram, depth: int) -> Diagram:
    return ConfigurationService().unfold(diagram, depth)


def minimal_arc_coverage(diagram: Diagram) -> bool:
    return ConfigurationService().minimal_arc_coverage(diagram)
