"""
Spherical Arcs - Enumeration Service
Exhaustive depth-first search over noncrossing admissible arc sets in a window,
pruned by the inner- and outer-isolated counts of the requested class.
"""
import logging
from dataclasses import dataclass, field
from typing import List, Optional

from spherical_arcs.config import get_settings
from spherical_arcs.exceptions import SphericalArcsError
from spherical_arcs.models.schemas import Boundary, ConfigClassValue, EmitMode, EnumRequest
from spherical_arcs.services.arc_core import Arc, as_weight
from spherical_arcs.services.configurations import Diagram, Window
from spherical_arcs.services.ptolemy_closure import PreconditionError

logger = logging.getLogger(__name__)


class EnumerationCapExceeded(SphericalArcsError):
    """Raised when the search visits more nodes than allowed; carries what was found so far."""

    def __init__(self, partial: List[Diagram], cap: int):
        self.partial = partial
        self.cap = cap
        super().__init__(f"enumeration stopped after {cap} search nodes with {len(partial)} diagrams found")


@dataclass
class EnumResult:
    count: int
    diagrams: List[Diagram] = field(default_factory=list)
    nodes_visited: int = 0


@dataclass
class _Open:
    target: int
    source: int
    inner: int = 0


class EnumerationService:
    """
    Depth-first enumeration.

    The sweep visits vertices left to right. A vertex either closes the innermost
    open arc, stays isolated, or opens an arc whose source is planned in advance
    and nests inside every open arc, so only noncrossing sets are produced.
    """

    def __init__(self):
        self.settings = get_settings()

    def enumerate(self, request: EnumRequest) -> EnumResult:
        """
        Raises:
            PreconditionError: For simple-minded systems on windows wider than 4(|w|+1) without a cap
            EnumerationCapExceeded: If the node budget runs out
        """
        w = as_weight(request.w)
        n, m = w.size, w.modulus
        target = ConfigClassValue(request.target_class)
        window = Window(request.lo, request.hi, Boundary(request.boundary))
        if target is ConfigClassValue.SMS and window.span > 4 * m and request.cap is None:
            raise PreconditionError(f"span {window.span} exceeds {4 * m}; pass an explicit cap")
        cap = request.cap or self.settings.enumeration_cap

        need_inner = target.at_least(ConfigClassValue.HOM_CONFIG)
        if target.at_least(ConfigClassValue.RIEDTMANN):
            outer_cap: Optional[int] = n - 1
        elif need_inner:
            outer_cap = n
        else:
            outer_cap = None
        exact_outer = n - 1 if target is ConfigClassValue.SMS else None
        keep = EmitMode(request.emit) is EmitMode.LIST

        found: List[Diagram] = []
        count = 0
        nodes = 0
        stack: List[_Open] = []
        arcs: List[Arc] = []
        outer = 0

        def emit() -> None:
            nonlocal count
            count += 1
            if keep:
                found.append(Diagram(w, frozenset(arcs), window=window))

        def walk(v: int) -> None:
            nonlocal nodes, outer
            nodes += 1
            if nodes > cap:
                raise EnumerationCapExceeded(sorted(found, key=Diagram.key), cap)

            if v > window.hi:
                if exact_outer is None or outer == exact_outer:
                    emit()
                return

            if stack and stack[-1].source == v:
                top = stack.pop()
                if not need_inner or top.inner == n - 1:
                    walk(v + 1)
                stack.append(top)
                return

            if stack:
                top = stack[-1]
                top.inner += 1
                if not need_inner or top.inner <= n - 1:
                    walk(v + 1)
                top.inner -= 1
            else:
                outer += 1
                if outer_cap is None or outer <= outer_cap:
                    walk(v + 1)
                outer -= 1

            limit = stack[-1].source - 1 if stack else window.hi
            for source in range(v + n, limit + 1, m):
                stack.append(_Open(v, source))
                arcs.append(Arc(source, v))
                walk(v + 1)
                arcs.pop()
                stack.pop()

        walk(window.lo)
        logger.debug(
            "enumerated w=%s [%s,%s] %s %s: %d diagrams, %d nodes",
            w.w, window.lo, window.hi, window.boundary, target.value, count, nodes,
        )
        return EnumResult(count, sorted(found, key=Diagram.key), nodes)

    def count(self, w: int, lo: int, hi: int, boundary: Boundary, target: ConfigClassValue) -> int:
        request = EnumRequest(w=w, lo=lo, hi=hi, boundary=boundary, target_class=target)
        return self.enumerate(request).count


def enumerate_configs(request: EnumRequest) -> EnumResult:
    return EnumerationService().enumerate(request)
