"""
Spherical Arcs - Acceptance Sweeps
Synchronous batch harnesses that run the combinatorial laws over every small
window and report back as status dicts carrying a pandas table of cases.
"""
import logging
import random
from math import comb
from typing import Dict, Iterator, List, Optional, Sequence

import pandas as pd

from spherical_arcs.config import get_settings
from spherical_arcs.models.schemas import Boundary, ClosurePolicy, ConfigClassValue, EmitMode, EnumRequest
from spherical_arcs.services.approximation import ApproximationService
from spherical_arcs.services.arc_core import Arc, Weight, admissible_arcs, arcs_cross, as_weight
from spherical_arcs.services.configurations import ConfigurationService, Diagram, vertex_report
from spherical_arcs.services.enumeration import EnumerationService
from spherical_arcs.services.hom_calculus import spherical_axioms
from spherical_arcs.services.mutation import MutationError, MutationService, smallest_overarc
from spherical_arcs.services.mutation_graph import MutationGraphService
from spherical_arcs.services.noncrossing import NoncrossingService
from spherical_arcs.services.ptolemy_closure import ClosureService

logger = logging.getLogger(__name__)


def _weights(weights: Optional[Sequence[int]]) -> List[Weight]:
    return [as_weight(w) for w in (weights or get_settings().sweep_weights)]


def _max_span(weight: Weight, periods: Optional[int]) -> int:
    return (periods or get_settings().sweep_max_span_periods) * weight.modulus


def _diagrams(weight: Weight, span: int, boundary: Boundary, target: ConfigClassValue) -> List[Diagram]:
    request = EnumRequest(
        w=weight.w, lo=0, hi=span - 1, boundary=boundary, target_class=target,
        emit=EmitMode.LIST, cap=get_settings().enumeration_cap,
    )
    return EnumerationService().enumerate(request).diagrams


def _sealed_sms_spans(weight: Weight, max_span: int) -> Iterator[int]:
    """Spans m*k + |w| - 1 of the sealed windows that carry simple-minded systems."""
    span = weight.size - 1 or weight.modulus
    while span <= max_span:
        yield span
        span += weight.modulus


def _label(arcs) -> str:
    return " ".join(str(a) for a in sorted(arcs, key=lambda a: (a.target, a.source))) or "{}"


def _completed(rows: List[Dict], check: str = "ok") -> dict:
    frame = pd.DataFrame(rows)
    failures = int((~frame[check]).sum()) if not frame.empty else 0
    return {"status": "completed", "rows": frame, "failures": failures}


def _failed(name: str, exc: Exception) -> dict:
    logger.exception("%s failed", name)
    return {"status": "failed", "error": type(exc).__name__, "message": str(exc)}


# ============================================
# Mutation laws
# ============================================

def mutation_law_sweep(weights: Optional[Sequence[int]] = None, max_span_periods: Optional[int] = None) -> dict:
    """
    Count laws of the completion fans and their agreement with the brute-force oracle.

    Free windows run over every Hom configuration; sealed windows over the
    simple-minded systems, whose virtual overarc covers every outer arc.
    """
    try:
        mutation = MutationService()
        configurations = ConfigurationService()
        rows: List[Dict] = []

        for weight in _weights(weights):
            n = weight.size
            cases = []
            for span in range(1, _max_span(weight, max_span_periods) + 1):
                cases.extend(_diagrams(weight, span, Boundary.FREE, ConfigClassValue.HOM_CONFIG))
            for span in _sealed_sms_spans(weight, _max_span(weight, max_span_periods)):
                cases.extend(_diagrams(weight, span, Boundary.SEALED, ConfigClassValue.SMS))

            for diagram in cases:
                value = configurations.classify(diagram, homological=False).value
                outer = len(vertex_report(diagram).outer)
                for s in diagram.sorted_arcs:
                    fan = mutation.completions_at(diagram, s)
                    oracle = mutation.brute_force_completions(diagram, s)
                    has_overarc = (smallest_overarc(diagram, s) or diagram.virtual_overarc) is not None
                    expected = n if has_overarc else outer + 1
                    proper = len(fan.proper_replacements)
                    proper_ok = proper <= n - 1
                    if value is ConfigClassValue.SMS:
                        proper_ok = proper == n - 1
                    rows.append({
                        "w": weight.w,
                        "boundary": diagram.window.boundary.value,
                        "span": diagram.window.span,
                        "diagram": _label(diagram.arcs),
                        "at": str(s),
                        "class": value.value,
                        "overarc": has_overarc,
                        "outer_isolated": outer,
                        "fan_size": len(fan.completions),
                        "expected": expected,
                        "proper": proper,
                        "oracle_agrees": fan.completions == oracle.completions,
                        "ok": len(fan.completions) == expected and proper_ok
                        and fan.completions == oracle.completions,
                    })
            logger.info("mutation laws w=%s: %d diagrams", weight.w, len(cases))

        return _completed(rows)
    except Exception as e:
        return _failed("mutation_law_sweep", e)


def iteration_sweep(weights: Optional[Sequence[int]] = None, max_span_periods: Optional[int] = None) -> dict:
    """
    Iterated left mutation on sealed simple-minded systems after one unfold.

    Every arc with a real overarc must run through |w| distinct arcs, come back
    at step |w|, and visit exactly its completion fan.
    """
    try:
        approximation = ApproximationService()
        configurations = ConfigurationService()
        rows: List[Dict] = []

        for weight in _weights(weights):
            n = weight.size
            for span in _sealed_sms_spans(weight, _max_span(weight, max_span_periods)):
                for diagram in _diagrams(weight, span, Boundary.SEALED, ConfigClassValue.SMS):
                    grown = configurations.unfold(diagram, 1)
                    for s in grown.sorted_arcs:
                        if smallest_overarc(grown, s) is None:
                            continue
                        fan = approximation.mutation.completions_at(grown, s)
                        try:
                            orbit = approximation.mutation_orbit(grown, s)
                            error = ""
                        except MutationError as exc:
                            orbit, error = [s], exc.message
                        visited = orbit[:n]
                        rows.append({
                            "w": weight.w,
                            "span": span,
                            "diagram": _label(grown.arcs),
                            "at": str(s),
                            "orbit": " -> ".join(map(str, orbit)),
                            "error": error,
                            "ok": not error
                            and orbit[-1] == s
                            and len(set(visited)) == n
                            and set(visited) == set(fan.completions),
                        })
            logger.info("iteration w=%s: %d orbits", weight.w, sum(1 for r in rows if r["w"] == weight.w))

        return _completed(rows)
    except Exception as e:
        return _failed("iteration_sweep", e)


# ============================================
# Homological checks
# ============================================

def serre_duality_sweep(weights: Optional[Sequence[int]] = None, lo: int = -40, hi: int = 40) -> dict:
    """Sphericity of minimal arcs and Serre duality on all admissible pairs of [lo, hi]."""
    try:
        rows: List[Dict] = []
        for weight in _weights(weights):
            report = spherical_axioms(weight, lo, hi)
            rows.append({
                "w": weight.w,
                "lo": lo,
                "hi": hi,
                "pairs_checked": report.pairs_checked,
                "sphericity_failures": len(report.sphericity_failures),
                "serre_failures": len(report.serre_failures),
                "ok": report.passed,
            })
            logger.info("serre duality w=%s: %d pairs, passed=%s", weight.w, report.pairs_checked, report.passed)
        return _completed(rows)
    except Exception as e:
        return _failed("serre_duality_sweep", e)


def _random_orthogonal_set(weight: Weight, rng: random.Random, span: int) -> List[Arc]:
    """Noncrossing admissible arcs drawn at random from [0, span-1]."""
    pool = admissible_arcs(weight, 0, span - 1)
    rng.shuffle(pool)
    chosen: List[Arc] = []
    for arc in pool[: rng.randint(1, 6)]:
        if not any(arcs_cross(arc, other) for other in chosen):
            chosen.append(arc)
    return chosen


def closure_policy_sweep(
    weights: Sequence[int] = (-1, -2, -3), samples: int = 500, seed: int = 0
) -> dict:
    """
    Class-II closures against full closures on random noncrossing sets, plus the
    split at every outer-isolated vertex.
    """
    try:
        service = ClosureService()
        rng = random.Random(seed)
        rows: List[Dict] = []
        for weight in _weights(weights):
            span = 4 * weight.modulus
            for _ in range(samples):
                arcs = _random_orthogonal_set(weight, rng, span)
                both = service.closure(weight, arcs, ClosurePolicy.BOTH).arcs
                class_two = service.closure(weight, arcs, ClosurePolicy.CLASS_II_ONLY).arcs
                lonely = [v for v in range(span) if not any(a.touches(v) or a.spans(v) for a in arcs)]
                rows.append({
                    "w": weight.w,
                    "arcs": _label(arcs),
                    "closure_size": len(both),
                    "policies_agree": both == class_two,
                    "splits": all(service.split_check(weight, arcs, v) for v in lonely),
                })
            logger.info("closure policies w=%s: %d samples", weight.w, samples)
        frame_rows = [dict(r, ok=r["policies_agree"] and r["splits"]) for r in rows]
        return _completed(frame_rows)
    except Exception as e:
        return _failed("closure_policy_sweep", e)


# ============================================
# Simple-minded systems
# ============================================

def sms_coverage_sweep(
    weights: Optional[Sequence[int]] = None, max_span_periods: int = 4, unfold_depth: int = 3
) -> dict:
    """Every sealed simple-minded system is Riedtmann and covers the minimal arcs, before and after unfolding."""
    try:
        configurations = ConfigurationService()
        rows: List[Dict] = []
        for weight in _weights(weights):
            for span in _sealed_sms_spans(weight, max_span_periods * weight.modulus):
                for diagram in _diagrams(weight, span, Boundary.SEALED, ConfigClassValue.SMS):
                    riedtmann = configurations.classify(diagram).at_least(ConfigClassValue.RIEDTMANN)
                    covered = [
                        configurations.minimal_arc_coverage(configurations.unfold(diagram, depth))
                        for depth in range(unfold_depth + 1)
                    ]
                    rows.append({
                        "w": weight.w,
                        "span": span,
                        "diagram": _label(diagram.arcs),
                        "riedtmann": riedtmann,
                        "covered": all(covered),
                        "ok": riedtmann and all(covered),
                    })
            logger.info("sms coverage w=%s done", weight.w)
        return _completed(rows)
    except Exception as e:
        return _failed("sms_coverage_sweep", e)


def fuss_catalan(weight: Weight, k: int) -> int:
    """Number of sealed simple-minded systems on a window of span m*k + |w| - 1."""
    m, r = weight.modulus, weight.size
    return r * comb(m * k + r, k) // (m * k + r)


def enumeration_count_table(weights: Optional[Sequence[int]] = None, max_span_periods: int = 4) -> dict:
    """Enumerated sealed simple-minded system counts next to their closed form."""
    try:
        service = EnumerationService()
        rows: List[Dict] = []
        for weight in _weights(weights):
            for span in _sealed_sms_spans(weight, max_span_periods * weight.modulus):
                k = (span - weight.size + 1) // weight.modulus
                count = service.count(weight.w, 0, span - 1, Boundary.SEALED, ConfigClassValue.SMS)
                expected = fuss_catalan(weight, k)
                rows.append({"w": weight.w, "k": k, "span": span, "count": count,
                             "expected": expected, "ok": count == expected})
            logger.info("enumeration counts w=%s: %s", weight.w, [r["count"] for r in rows if r["w"] == weight.w])
        return _completed(rows)
    except Exception as e:
        return _failed("enumeration_count_table", e)


def nc_agreement_sweep(max_span: int = 10) -> dict:
    """Simple-minded systems against finite noncrossing blocks on every orthogonal sealed (-1)-window."""
    try:
        service = NoncrossingService()
        rows: List[Dict] = []
        for span in range(1, max_span + 1):
            request = EnumRequest(
                w=-1, lo=0, hi=span - 1, boundary=Boundary.SEALED,
                target_class=ConfigClassValue.ORTHOGONAL, emit=EmitMode.LIST,
            )
            for diagram in EnumerationService().enumerate(request).diagrams:
                agreement = service.sms_iff_finite_blocks(diagram)
                rows.append({
                    "span": span,
                    "diagram": _label(diagram.arcs),
                    "is_sms": agreement.is_sms,
                    "all_blocks_finite": agreement.all_blocks_finite,
                    "ok": agreement.agree,
                })
        logger.info("nc agreement: %d diagrams", len(rows))
        return _completed(rows)
    except Exception as e:
        return _failed("nc_agreement_sweep", e)


def graph_invariance_sweep(weights: Optional[Sequence[int]] = None, max_span_periods: Optional[int] = None) -> dict:
    """Mutation-graph edges join diagrams with equal outer-isolated counts."""
    try:
        service = MutationGraphService()
        rows: List[Dict] = []
        for weight in _weights(weights):
            for span in range(1, _max_span(weight, max_span_periods) + 1):
                graph = service.build(weight.w, 0, span - 1, Boundary.FREE, ConfigClassValue.HOM_CONFIG)
                bad = [
                    (u, v) for u, v in graph.edges
                    if graph.nodes[u]["outer_isolated"] != graph.nodes[v]["outer_isolated"]
                ]
                rows.append({
                    "w": weight.w,
                    "span": span,
                    "nodes": graph.number_of_nodes(),
                    "edges": graph.number_of_edges(),
                    "ok": not bad,
                })
            logger.info("graph invariance w=%s done", weight.w)
        return _completed(rows)
    except Exception as e:
        return _failed("graph_invariance_sweep", e)


SWEEPS = {
    "mutation-laws": mutation_law_sweep,
    "iteration": iteration_sweep,
    "serre": serre_duality_sweep,
    "closure-policies": closure_policy_sweep,
    "sms-coverage": sms_coverage_sweep,
    "counts": enumeration_count_table,
    "nc": nc_agreement_sweep,
    "graphs": graph_invariance_sweep,
}
