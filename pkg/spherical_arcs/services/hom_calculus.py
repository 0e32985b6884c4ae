"""
Spherical Arcs - Hom Calculus
Dimensions of Hom and Ext spaces between indecomposables, decided by the
extension characterization: Ext^1(b, a) is nonzero exactly in the shifted case,
the two strict-crossing cases with admissible Ptolemy pairs, and the three
neighbouring cases.
"""
import logging
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from spherical_arcs.models.schemas import Ext1Case
from spherical_arcs.services.arc_core import (
    Arc,
    WeightLike,
    admissible_arcs,
    as_weight,
    is_admissible,
    minimal_arcs,
    require_admissible,
)

logger = logging.getLogger(__name__)


NEIGHBOURING_CASES = frozenset({
    Ext1Case.NBR_E1_PLUS,
    Ext1Case.NBR_E1_MINUS,
    Ext1Case.NBR_E2_MINUS,
})
CROSSING_CASES = frozenset({Ext1Case.CROSS_PLUS, Ext1Case.CROSS_MINUS})


@dataclass(frozen=True)
class Ext1Answer:
    """Whether Ext^1(b, a) is nonzero, and the middle term of the nonsplit triangle a -> e -> b."""

    nonzero: bool
    middle: Tuple[Arc, ...] = ()
    case_tag: Ext1Case = Ext1Case.NONE


ZERO = Ext1Answer(False)


def ext1(w: WeightLike, b: Arc, a: Arc, check: bool = True) -> Ext1Answer:
    """
    Decide Ext^1(b, a) for admissible arcs.

    Args:
        w: Weight
        b: Quotient end of the triangle a -> e -> b
        a: Sub end of the triangle
        check: Validate admissibility of the inputs

    Returns:
        Ext1Answer with the case that fired and the middle-term summands

    Raises:
        InadmissibleArcError: If check is on and an input is not admissible
    """
    weight = as_weight(w)
    if check:
        require_admissible(weight, b)
        require_admissible(weight, a)

    if a == b:
        return ZERO

    sa, ta = a.source, a.target
    sb, tb = b.source, b.target

    if sb == sa - 1 and tb == ta - 1:
        return Ext1Answer(True, (), Ext1Case.SIGMA_SHIFT)

    # shared endpoints: crossing but neither strict nor neighbouring
    if sa == sb or sa == tb or ta == sb or ta == tb:
        return ZERO

    if tb < ta < sb < sa:
        e1, e2 = Arc(sa, tb), Arc(sb, ta)
        if is_admissible(weight, e1) and is_admissible(weight, e2):
            return Ext1Answer(True, (e1, e2), Ext1Case.CROSS_PLUS)
        return ZERO

    if ta < tb < sa < sb:
        e1, e2 = Arc(sb, sa), Arc(tb, ta)
        if is_admissible(weight, e1) and is_admissible(weight, e2):
            return Ext1Answer(True, (e1, e2), Ext1Case.CROSS_MINUS)
        return ZERO

    distance = min(abs(sa - sb), abs(ta - tb), abs(sa - tb), abs(ta - sb))
    if distance != 1:
        return ZERO

    if ta == sb + 1:
        return Ext1Answer(True, (Arc(sa, tb),), Ext1Case.NBR_E1_PLUS)
    if ta == tb + 1:
        return Ext1Answer(True, (Arc(sb, sa),), Ext1Case.NBR_E1_MINUS)
    if sa == sb + 1:
        return Ext1Answer(True, (Arc(tb, ta),), Ext1Case.NBR_E2_MINUS)
    return ZERO


def hom_dim(w: WeightLike, x: Arc, y: Arc, check: bool = True) -> int:
    """dim Hom(x, y) in {0, 1}, read off as Ext^1(x, Sigma^{-1} y)."""
    return int(ext1(w, x, y.shifted(-1), check=check).nonzero)


def ext_dim(w: WeightLike, k: int, x: Arc, y: Arc, check: bool = True) -> int:
    """dim Ext^k(x, y) = dim Hom(x, Sigma^k y)."""
    return hom_dim(w, x, y.shifted(k), check=check)


# ============================================
# Spherical object axioms
# ============================================

@dataclass
class SphericalAxiomReport:
    w: int
    lo: int
    hi: int
    sphericity_failures: List[Tuple[Arc, int, int]] = field(default_factory=list)
    serre_failures: List[Tuple[Arc, Arc]] = field(default_factory=list)
    pairs_checked: int = 0

    @property
    def passed(self) -> bool:
        return not self.sphericity_failures and not self.serre_failures


def spherical_axioms(w: WeightLike, lo: int, hi: int, serre: bool = True) -> SphericalAxiomReport:
    """
    Check the defining properties of a w-spherical generator on a coordinate range.

    Every minimal arc x must satisfy Hom(x, Sigma^i x) != 0 exactly for i in {0, w}
    when |i| <= 2(|w|+1), and Serre duality Hom(x, y) = Hom(y, Sigma^w x) must hold
    for all admissible pairs inside [lo, hi].
    """
    weight = as_weight(w)
    report = SphericalAxiomReport(weight.w, lo, hi)
    reach = 2 * weight.modulus

    for x in minimal_arcs(weight, lo, hi):
        for i in range(-reach, reach + 1):
            expected = 1 if i in (0, weight.w) else 0
            got = hom_dim(weight, x, x.shifted(i), check=False)
            if got != expected:
                report.sphericity_failures.append((x, i, got))

    if serre:
        arcs = admissible_arcs(weight, lo, hi)
        for x in arcs:
            serre_image = x.shifted(weight.w)
            for y in arcs:
                report.pairs_checked += 1
                if hom_dim(weight, x, y, check=False) != hom_dim(weight, y, serre_image, check=False):
                    report.serre_failures.append((x, y))

    logger.debug(
        "spherical axioms w=%s on [%s,%s]: %s sphericity, %s serre failures",
        weight.w, lo, hi, len(report.sphericity_failures), len(report.serre_failures),
    )
    return report


def describe_ext(w: WeightLike, k: int, x: Arc, y: Arc) -> Tuple[int, Optional[Ext1Answer]]:
    """Dimension of Ext^k(x, y) plus, for k = 1, the answer carrying the middle term."""
    weight = as_weight(w)
    require_admissible(weight, x)
    require_admissible(weight, y)
    if k == 1:
        answer = ext1(weight, x, y)
        return int(answer.nonzero), answer
    return ext_dim(weight, k, x, y), None
