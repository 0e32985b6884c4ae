"""
Spherical Arcs - mutate / mutate-approx Commands
"""
import argparse

from spherical_arcs.commands.common import arc_arg, emit, fmt_arcs, load
from spherical_arcs.models.graph_schemas import ApproxReport, ApproxStepOut, FanOut, FanReport
from spherical_arcs.models.schemas import Direction
from spherical_arcs.services.approximation import ApproximationService
from spherical_arcs.services.mutation import MutationFan, MutationService


def _fan_out(fan: MutationFan) -> FanOut:
    return FanOut(
        at=fan.at.as_pair(),
        method=fan.method,
        completions=[a.as_pair() for a in fan.sorted_completions],
        proper_replacements=[a.as_pair() for a in fan.proper_replacements],
    )


def run_mutate(args: argparse.Namespace) -> int:
    diagram = load(args, args.file)
    service = MutationService()
    fan = service.completions_at(diagram, args.at)
    report = FanReport(fan=_fan_out(fan))
    lines = [
        f"completions at {fan.at}: {fmt_arcs(fan.sorted_completions)}",
        f"proper replacements: {fmt_arcs(fan.proper_replacements)}",
    ]
    if args.oracle:
        oracle = service.brute_force_completions(diagram, args.at)
        report.oracle = _fan_out(oracle)
        report.oracle_agrees = oracle.completions == fan.completions
        lines.append(f"oracle: {fmt_arcs(oracle.sorted_completions)} ({'agrees' if report.oracle_agrees else 'DISAGREES'})")
    emit(args, report, "\n".join(lines))
    return 0


def run_mutate_approx(args: argparse.Namespace) -> int:
    diagram = load(args, args.file)
    steps = ApproximationService().iterate_mutations(diagram, args.at, args.steps, args.dir)
    report = ApproxReport(
        steps=[
            ApproxStepOut(
                s=step.s.as_pair(),
                direction=step.direction,
                case=step.case,
                e1=step.e1.as_pair() if step.e1 else None,
                e2=step.e2.as_pair() if step.e2 else None,
                s_prime=step.s_prime.as_pair(),
                s_star=step.s_star.as_pair(),
                bracketed=step.bracketed,
            )
            for step in steps
        ],
        orbit=[args.at.as_pair()] + [step.s_star.as_pair() for step in steps],
    )
    lines = []
    for step in steps:
        lines.append(
            f"{step.direction.value} at {step.s}: case {step.case}"
            f"{' (bracketed)' if step.bracketed else ''}, e1={step.e1 or '-'}, e2={step.e2 or '-'},"
            f" s'={step.s_prime}, s*={step.s_star}"
        )
    lines.append("orbit: " + " -> ".join(str(tuple(p)).replace(" ", "") for p in report.orbit))
    emit(args, report, "\n".join(lines))
    return 0


def register(subparsers, parents) -> None:
    mutate = subparsers.add_parser("mutate", parents=parents, help="completions of a configuration at one arc")
    mutate.add_argument("file")
    mutate.add_argument("--at", type=arc_arg, required=True, help="arc 'source,target'")
    mutate.add_argument("--oracle", action="store_true", help="compare with the brute-force completions")
    mutate.set_defaults(handler=run_mutate)

    approx = subparsers.add_parser(
        "mutate-approx", parents=parents,
        help="mutation through approximations; sealed windows need one unfold first",
    )
    approx.add_argument("file")
    approx.add_argument("--at", type=arc_arg, required=True)
    approx.add_argument("--dir", type=Direction, default=Direction.LEFT, choices=list(Direction))
    approx.add_argument("--steps", type=int, default=1)
    approx.set_defaults(handler=run_mutate_approx)
