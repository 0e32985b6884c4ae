"""
Spherical Arcs - Noncrossing Partitions
Bridge between (-1)-configurations and noncrossing partitions of half-integer
points, with the Kreweras complement on the interleaved point set.

Half-integer points are stored doubled: the point x + 0.5 is the odd integer
2x + 1. Points of the primal partition are 1 mod 4 (2n + 0.5), points of the
complement are 3 mod 4 (2n - 0.5).
"""
import logging
from dataclasses import dataclass, field
from typing import FrozenSet, Iterable, List, Optional, Sequence, Tuple

from more_itertools import set_partitions
from networkx.utils import UnionFind

from spherical_arcs.models.schemas import ConfigClassValue
from spherical_arcs.services.arc_core import crossing_pairs
from spherical_arcs.services.configurations import CrossingError, Diagram, classify_configuration
from spherical_arcs.services.ptolemy_closure import PreconditionError

logger = logging.getLogger(__name__)

Block = Tuple[int, ...]

PRIMAL_RESIDUE = 1
DUAL_RESIDUE = 3


@dataclass
class NcPartition:
    blocks: List[Block]
    escaping: FrozenSet[int] = frozenset()

    def halves(self) -> List[List[float]]:
        """Blocks as half-integer points."""
        return [[p / 2 for p in block] for block in self.blocks]

    @property
    def finite(self) -> bool:
        return not self.escaping


@dataclass
class NcResult:
    nc: NcPartition
    kreweras: NcPartition


@dataclass
class NcAgreement:
    is_sms: bool
    riedtmann: bool
    all_blocks_finite: bool
    result: NcResult = field(repr=False, default=None)

    @property
    def agree(self) -> bool:
        """True when the diagram is a simple-minded system exactly when every block is finite."""
        return self.is_sms == self.all_blocks_finite


def _canonical(blocks: Iterable[Iterable[int]]) -> List[Block]:
    return sorted((tuple(sorted(b)) for b in blocks), key=lambda b: b[0])


def partition_crosses(blocks: Sequence[Sequence[int]]) -> bool:
    """True when two blocks interleave as a < b < c < d with a, c in one block and b, d in the other."""
    for i, first in enumerate(blocks):
        for second in blocks[i + 1:]:
            labels = [owner for _, owner in sorted([(p, 0) for p in first] + [(p, 1) for p in second])]
            runs = [label for k, label in enumerate(labels) if k == 0 or labels[k - 1] != label]
            if len(runs) >= 4:
                return True
    return False


def _window_points(lo: int, hi: int, residue: int) -> List[int]:
    return [p for p in range(2 * lo - 1, 2 * hi + 2) if p % 4 == residue]


def _escaping(blocks: List[Block], lo: int, hi: int) -> FrozenSet[int]:
    flagged = set()
    for i, block in enumerate(blocks):
        if (block[-1] + 1) // 2 > hi or (block[0] - 1) // 2 < lo:
            flagged.add(i)
    return frozenset(flagged)


def _open_blocks(
    blocks: List[Block], lo: int, hi: int, chains: Optional[Sequence[Block]] = None
) -> FrozenSet[int]:
    """
    Blocks of a sealed window that are not closed.

    The wrap arc (hi + 1, lo - 1) joins the border points lo - 0.5 and hi + 0.5,
    so a block touching the border is closed only when its chain runs from one
    border point to the other. When chains are given, a block must also be one
    of them: a complement block that no arc chain realizes leaves the window.
    """
    first, last = 2 * lo - 1, 2 * hi + 1
    realized = None if chains is None else set(chains)
    flagged = set()
    for i, block in enumerate(blocks):
        ends = {first, last} & set(block)
        if len(ends) == 1 or (realized is not None and block not in realized):
            flagged.add(i)
    return frozenset(flagged)


def kreweras_complement(
    blocks: Sequence[Sequence[int]], dual_points: Iterable[int]
) -> List[Block]:
    """
    Maximal partition of the dual points whose union with blocks stays noncrossing.

    Two dual points share a block exactly when no primal block has members both
    strictly between them and outside that interval.
    """
    dual = sorted(dual_points)
    groups = UnionFind(dual)
    for i, q in enumerate(dual):
        for r in dual[i + 1:]:
            if not any(
                any(q < p < r for p in block) and any(p < q or p > r for p in block)
                for block in blocks
            ):
                groups.union(q, r)
    return _canonical(groups.to_sets())


def _refines(finer: Sequence[Block], coarser: Sequence[Block]) -> bool:
    return all(any(set(b) <= set(c) for c in coarser) for b in finer)


def maximal_complements_brute_force(
    blocks: Sequence[Sequence[int]], dual_points: Iterable[int]
) -> List[List[Block]]:
    """All partitions of the dual points that are maximal among noncrossing complements."""
    dual = sorted(dual_points)
    if not dual:
        return [[]]
    primal = [tuple(b) for b in blocks]
    candidates = []
    for partition in set_partitions(dual):
        if not partition_crosses(primal + [tuple(p) for p in partition]):
            candidates.append(_canonical(partition))
    return [
        c for c in candidates
        if not any(other != c and _refines(c, other) for other in candidates)
    ]


class NoncrossingService:
    """Chain-rule partitions of (-1)-configurations and their Kreweras complements."""

    def _require_window(self, diagram: Diagram) -> None:
        if diagram.w.w != -1:
            raise PreconditionError("noncrossing partitions are defined for w = -1 only")
        if diagram.is_periodic:
            raise PreconditionError("restrict a periodic diagram to a window first")
        pairs = crossing_pairs(diagram.arcs)
        if pairs:
            raise CrossingError(pairs[0])

    def chain_partition(self, diagram: Diagram, residue: int = PRIMAL_RESIDUE) -> NcPartition:
        """
        Blocks built by following arcs: from point x, if x + 0.5 is the target of an
        arc a, the next point is s(a) + 0.5.
        """
        self._require_window(diagram)
        lo, hi = diagram.window.lo, diagram.window.hi
        by_target = {a.target: a for a in diagram.arcs}
        sources = {a.source for a in diagram.arcs}

        blocks: List[Block] = []
        for start in _window_points(lo, hi, residue):
            if (start - 1) // 2 in sources:
                continue
            chain = [start]
            while (chain[-1] + 1) // 2 in by_target:
                chain.append(2 * by_target[(chain[-1] + 1) // 2].source + 1)
            blocks.append(tuple(chain))

        blocks = _canonical(blocks)
        if diagram.is_sealed:
            return NcPartition(blocks, _open_blocks(blocks, lo, hi))
        return NcPartition(blocks, _escaping(blocks, lo, hi))

    def nc_partition(self, diagram: Diagram) -> NcResult:
        """The primal partition of 2n + 0.5 points and its Kreweras complement on 2n - 0.5."""
        primal = self.chain_partition(diagram, PRIMAL_RESIDUE)
        lo, hi = diagram.window.lo, diagram.window.hi
        dual_blocks = kreweras_complement(primal.blocks, _window_points(lo, hi, DUAL_RESIDUE))
        if diagram.is_sealed:
            chains = self.chain_partition(diagram, DUAL_RESIDUE).blocks
            dual = NcPartition(dual_blocks, _open_blocks(dual_blocks, lo, hi, chains))
        else:
            dual = NcPartition(dual_blocks, _escaping(dual_blocks, lo, hi))
        logger.debug("nc: %d primal blocks, %d complement blocks", len(primal.blocks), len(dual.blocks))
        return NcResult(primal, dual)

    def sms_iff_finite_blocks(self, diagram: Diagram) -> NcAgreement:
        result = self.nc_partition(diagram)
        value = classify_configuration(diagram, homological=False).value
        return NcAgreement(
            is_sms=value is ConfigClassValue.SMS,
            riedtmann=value.at_least(ConfigClassValue.RIEDTMANN),
            all_blocks_finite=result.nc.finite and result.kreweras.finite,
            result=result,
        )


def nc_partition(diagram: Diagram) -> NcResult:
    return NoncrossingService().nc_partition(diagram)


def sms_iff_finite_blocks(diagram: Diagram) -> NcAgreement:
    return NoncrossingService().sms_iff_finite_blocks(diagram)
