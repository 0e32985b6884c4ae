"""
Spherical Arcs - Arc Core
Exact arithmetic of admissible arcs: admissibility, functor actions and the
pairwise geometric predicates every other service consumes.

Arcs are stored source-major: an arc (source, target) has source > target and is
drawn above the number line from its source back to its target.
"""
from dataclasses import dataclass
from typing import Iterable, List, NamedTuple, Optional, Tuple, Union

from spherical_arcs.exceptions import SphericalArcsError
from spherical_arcs.models.schemas import Functor, RelationKind


class InvalidWeightError(SphericalArcsError, ValueError):
    """Raised when a weight is not a negative integer."""

    def __init__(self, value: object):
        self.value = value
        super().__init__(f"weight must be an integer <= -1, got {value!r}")


class MalformedArcError(SphericalArcsError, ValueError):
    """Raised when an arc does not satisfy source > target."""


class InadmissibleArcError(SphericalArcsError, ValueError):
    """Raised when an arc is not admissible for the weight in use."""

    def __init__(self, arc: "Arc", w: int, message: str = None):
        self.arc = arc
        self.w = w
        self.message = message or (
            f"arc {arc} of length {arc.length} is not admissible for w={w}"
        )
        super().__init__(self.message)


@dataclass(frozen=True)
class Weight:
    """The Calabi-Yau weight w <= -1 together with its derived constants."""

    w: int

    def __post_init__(self):
        if isinstance(self.w, bool) or not isinstance(self.w, int) or self.w > -1:
            raise InvalidWeightError(self.w)

    @property
    def d(self) -> int:
        return self.w - 1

    @property
    def size(self) -> int:
        """|w|"""
        return -self.w

    @property
    def modulus(self) -> int:
        """|w| + 1, the period of admissible lengths."""
        return -self.w + 1

    def __int__(self) -> int:
        return self.w

    def __str__(self) -> str:
        return str(self.w)


WeightLike = Union[Weight, int]


def as_weight(w: WeightLike) -> Weight:
    """Accept either a Weight or a bare integer."""
    if isinstance(w, Weight):
        return w
    return Weight(w)


class Arc(NamedTuple):
    """An arc (source, target) over the integer line."""

    source: int
    target: int

    @property
    def length(self) -> int:
        return self.source - self.target

    def spans(self, vertex: int) -> bool:
        """True when the vertex lies strictly under the arc."""
        return self.target < vertex < self.source

    def covers(self, other: "Arc") -> bool:
        """True when this arc is a strict overarc of the other."""
        return self.target < other.target and other.source < self.source

    def touches(self, vertex: int) -> bool:
        return vertex == self.source or vertex == self.target

    def shifted(self, k: int = 1) -> "Arc":
        """Apply the k-th suspension: (t, u) -> (t - k, u - k)."""
        return Arc(self.source - k, self.target - k)

    def reflected(self) -> "Arc":
        """Mirror through vertex 0; sources and targets swap roles."""
        return Arc(-self.target, -self.source)

    def as_pair(self) -> Tuple[int, int]:
        return (self.source, self.target)

    def __str__(self) -> str:
        return f"({self.source},{self.target})"


def make_arc(source: int, target: int) -> Arc:
    """Build an arc, rejecting pairs whose source does not exceed the target."""
    if source <= target:
        raise MalformedArcError("source must exceed target")
    return Arc(source, target)


def arc_sort_key(arc: Arc) -> Tuple[int, int]:
    """Canonical ordering by (target, source)."""
    return (arc.target, arc.source)


def sort_arcs(arcs: Iterable[Arc]) -> List[Arc]:
    return sorted(arcs, key=arc_sort_key)


# ============================================
# Admissibility and functors
# ============================================

def is_admissible(w: WeightLike, a: Arc) -> bool:
    """Length at least |w| and congruent to |w| modulo |w| + 1."""
    weight = as_weight(w)
    length = a.source - a.target
    return length >= weight.size and length % weight.modulus == weight.size


def require_admissible(w: WeightLike, a: Arc) -> Arc:
    """Return the arc unchanged or raise InadmissibleArcError."""
    weight = as_weight(w)
    if a.source <= a.target:
        raise MalformedArcError("source must exceed target")
    if not is_admissible(weight, a):
        raise InadmissibleArcError(a, weight.w)
    return a


def apply_functor(w: WeightLike, a: Arc, functor: Functor, power: int = 1) -> Arc:
    """
    Apply a power of the suspension, Auslander-Reiten translation or Serre functor.

    Sigma(t,u) = (t-1, u-1), tau(t,u) = (t-d, u-d), S(t,u) = (t-w, u-w).
    """
    weight = as_weight(w)
    functor = Functor(functor)
    if functor is Functor.SUSPENSION:
        step = 1
    elif functor is Functor.TAU:
        step = weight.d
    else:
        step = weight.w
    return a.shifted(step * power)


def component_index(w: WeightLike, a: Arc) -> int:
    """Index of the ZA-infinity component holding the arc: source mod (|w| + 1)."""
    weight = as_weight(w)
    require_admissible(weight, a)
    return a.source % weight.modulus


def admissible_arcs(w: WeightLike, lo: int, hi: int) -> List[Arc]:
    """Every admissible arc with both endpoints in [lo, hi], ordered by (target, source)."""
    weight = as_weight(w)
    arcs = []
    for target in range(lo, hi + 1):
        for source in range(target + weight.size, hi + 1, weight.modulus):
            arcs.append(Arc(source, target))
    return arcs


def minimal_arcs(w: WeightLike, lo: int, hi: int) -> List[Arc]:
    """Admissible arcs of the minimum length |w| inside [lo, hi]."""
    weight = as_weight(w)
    return [Arc(t + weight.size, t) for t in range(lo, hi - weight.size + 1)]


# ============================================
# Pairwise geometry
# ============================================

@dataclass(frozen=True)
class Relation:
    """How two distinct arcs sit relative to each other."""

    kind: RelationKind
    distance: int
    neighbouring: bool
    witnesses: Tuple[Tuple[int, int], ...] = ()
    overarc: Optional[Arc] = None

    @property
    def witness(self) -> Optional[Tuple[int, int]]:
        return self.witnesses[0] if self.witnesses else None

    @property
    def crossing(self) -> bool:
        """Crossing in the wide sense: strict crossing or a shared endpoint."""
        return self.kind in (RelationKind.STRICT_CROSS, RelationKind.SHARED_VERTEX)


def endpoint_distance(a: Arc, b: Arc) -> int:
    return min(
        abs(a.source - b.source),
        abs(a.target - b.target),
        abs(a.source - b.target),
        abs(a.target - b.source),
    )


def strictly_cross(a: Arc, b: Arc) -> bool:
    return (
        a.target < b.target < a.source < b.source
        or b.target < a.target < b.source < a.source
    )


def arcs_cross(a: Arc, b: Arc) -> bool:
    """Crossing in the wide sense, without building a Relation."""
    if a.source == b.source or a.source == b.target or a.target == b.source or a.target == b.target:
        return True
    return strictly_cross(a, b)


def relate(a: Arc, b: Arc) -> Relation:
    """
    Classify the position of b relative to a.

    Returns:
        Relation with kind, endpoint distance, neighbouring flag, the vertex pairs
        (vertex of a, vertex of b) at distance 1 when neighbouring, and the overarc
        when the arcs are nested.

    Raises:
        MalformedArcError: If the two arcs are equal
    """
    if a == b:
        raise MalformedArcError(f"cannot relate arc {a} to itself")

    distance = endpoint_distance(a, b)

    if distance == 0:
        return Relation(RelationKind.SHARED_VERTEX, 0, False)
    if strictly_cross(a, b):
        return Relation(RelationKind.STRICT_CROSS, distance, False)

    overarc = None
    if a.covers(b):
        kind, overarc = RelationKind.NESTED, a
    elif b.covers(a):
        kind, overarc = RelationKind.NESTED, b
    else:
        kind = RelationKind.DISJOINT

    witnesses: Tuple[Tuple[int, int], ...] = ()
    if distance == 1:
        witnesses = tuple(
            (x, y)
            for x in (a.source, a.target)
            for y in (b.source, b.target)
            if abs(x - y) == 1
        )
    return Relation(kind, distance, distance == 1, witnesses, overarc)


def crossing_pairs(arcs: Iterable[Arc]) -> List[Tuple[Arc, Arc]]:
    """All pairs of distinct arcs that cross (strictly or at a shared vertex)."""
    ordered = sort_arcs(set(arcs))
    pairs = []
    for i, a in enumerate(ordered):
        for b in ordered[i + 1:]:
            if b.target > a.source:
                break
            if arcs_cross(a, b):
                pairs.append((a, b))
    return pairs
