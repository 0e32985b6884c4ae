"""
Spherical Arcs - closure / fountain Commands
"""
import argparse

from spherical_arcs.commands.common import emit, fmt_arcs, int_list_arg, load, load_arcs
from spherical_arcs.models.schemas import ClosurePolicy, ClosureReport, FountainReportOut, LeveledArc, Recursion
from spherical_arcs.services.arc_core import sort_arcs
from spherical_arcs.services.fountains import FountainService
from spherical_arcs.services.ptolemy_closure import ClosureService


def run_closure(args: argparse.Namespace) -> int:
    file_w, arcs = load_arcs(args.arcs)
    w = args.w if args.w is not None else file_w
    if w is None:
        raise ValueError("this command needs --w or a 'w' field in the arcs file")

    result = ClosureService().closure(w, arcs, args.policy, args.recursion)
    ordered = sort_arcs(result.arcs)
    levels = None
    if args.levels:
        levels = []
        for arc in ordered:
            parents = result.parents.get(arc)
            levels.append(LeveledArc(
                arc=arc.as_pair(),
                level=result.level[arc],
                parents=(parents[0].as_pair(), parents[1].as_pair()) if parents else None,
            ))
    report = ClosureReport(
        w=w, policy=result.policy, recursion=result.recursion,
        arcs=[a.as_pair() for a in ordered], levels=levels,
    )

    if args.levels:
        lines = [f"level {n}: {fmt_arcs(result.at_level(n))}" for n in range(1, result.depth + 1)]
    else:
        lines = [fmt_arcs(ordered)]
    emit(args, report, "\n".join(lines))
    return 0


def run_fountain(args: argparse.Namespace) -> int:
    diagram = load(args, args.config)
    report = FountainService().fountain_report(diagram, args.vertex, args.depths)
    out = FountainReportOut(
        w=report.w,
        vertex=report.vertex,
        depths=report.depths,
        left_counts=report.left_counts,
        right_counts=report.right_counts,
        verdict=report.verdict,
        one_sided=report.one_sided,
    )
    text = "\n".join([
        f"depths: {report.depths}",
        f"left counts (source {report.vertex}): {report.left_counts}",
        f"right counts (target {report.vertex}): {report.right_counts}",
        f"verdict: {report.verdict.value}" + (" (one-sided)" if report.one_sided else ""),
    ])
    emit(args, out, text)
    return 0


def register(subparsers, parents) -> None:
    closure = subparsers.add_parser("closure", parents=parents, help="extension closure of a set of arcs")
    closure.add_argument("--arcs", required=True, help="diagram file or JSON list of [source, target] pairs")
    closure.add_argument("--policy", type=ClosurePolicy.parse, default=ClosurePolicy.BOTH,
                         help="both (default) or class2")
    closure.add_argument("--recursion", type=Recursion, default=Recursion.LEFT, choices=list(Recursion))
    closure.add_argument("--levels", action="store_true", help="report the level of every arc")
    closure.set_defaults(handler=run_closure)

    fountain = subparsers.add_parser("fountain", parents=parents, help="fountain heuristic at a vertex")
    fountain.add_argument("--config", required=True, help="periodic or sealed diagram file")
    fountain.add_argument("--vertex", type=int, required=True)
    fountain.add_argument("--depths", type=int_list_arg, default=None)
    fountain.set_defaults(handler=run_fountain)
