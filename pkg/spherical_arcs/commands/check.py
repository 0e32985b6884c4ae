"""
Spherical Arcs - check / ext Commands
Classify a diagram file, and report Hom/Ext dimensions between two arcs.
"""
import argparse

from spherical_arcs.commands.common import arc_arg, emit, load, require_w
from spherical_arcs.models.schemas import (
    ClassificationReport,
    ConfigClassValue,
    ExtReport,
    OrthogonalityOut,
    VertexStatusOut,
    ViolationOut,
)
from spherical_arcs.services.configurations import ConfigClass, ConfigurationService
from spherical_arcs.services.hom_calculus import describe_ext

EXIT_MISMATCH = 2


def build_report(result: ConfigClass) -> ClassificationReport:
    vertices = result.vertices
    orthogonality = result.orthogonality
    return ClassificationReport(
        config_class=result.value,
        violations=[
            ViolationOut(code=v.code, message=v.message, arcs=[a.as_pair() for a in v.arcs], vertices=v.vertices)
            for v in result.violations
        ],
        vertices=[
            VertexStatusOut(vertex=s.vertex, status=s.kind, arc=s.arc.as_pair() if s.arc else None)
            for s in (vertices.statuses if vertices else [])
        ],
        outer_isolated=list(vertices.outer) if vertices else [],
        virtual_inner_isolated=vertices.virtual_inner if vertices else [],
        orthogonality=OrthogonalityOut(
            passed=orthogonality.passed,
            crossing_free=orthogonality.crossing_free,
            agrees=orthogonality.agrees,
            pairs_checked=orthogonality.pairs_checked,
            failures=orthogonality.failures,
        ) if orthogonality else None,
    )


def run_check(args: argparse.Namespace) -> int:
    diagram = load(args, args.file)
    result = ConfigurationService().classify(diagram, bound=args.bound)
    report = build_report(result)

    lines = [f"class: {result.value.value}"]
    if report.outer_isolated:
        lines.append(f"outer-isolated: {', '.join(map(str, report.outer_isolated))}")
    for violation in result.violations:
        lines.append(f"  {violation.code}: {violation.message}")

    code = 0
    if args.expect is not None:
        report.expected = args.expect
        report.matches_expected = result.value is args.expect
        lines.append(f"expected {args.expect.value}: {'match' if report.matches_expected else 'MISMATCH'}")
        if not report.matches_expected:
            code = EXIT_MISMATCH

    emit(args, report, "\n".join(lines))
    return code


def run_ext(args: argparse.Namespace) -> int:
    w = require_w(args)
    dimension, answer = describe_ext(w, args.k, args.x, args.y)
    report = ExtReport(
        w=w,
        k=args.k,
        x=args.x.as_pair(),
        y=args.y.as_pair(),
        dimension=dimension,
        case=answer.case_tag if answer else None,
        middle=[a.as_pair() for a in answer.middle] if answer else [],
    )
    text = f"dim Ext^{args.k}({args.x},{args.y}) = {dimension}"
    if answer is not None and answer.nonzero:
        text += f"  [{answer.case_tag.value}]"
        if answer.middle:
            text += " middle: " + " ".join(str(a) for a in answer.middle)
    emit(args, report, text)
    return 0


def register(subparsers, parents) -> None:
    check = subparsers.add_parser("check", parents=parents, help="classify a diagram file")
    check.add_argument("file")
    check.add_argument("--expect", type=ConfigClassValue, choices=list(ConfigClassValue), default=None)
    check.add_argument("--bound", type=int, default=None, help="distance bound for homological checks")
    check.set_defaults(handler=run_check)

    ext = subparsers.add_parser("ext", parents=parents, help="dimension of Ext^k(x, y)")
    ext.add_argument("--k", type=int, required=True)
    ext.add_argument("--x", type=arc_arg, required=True)
    ext.add_argument("--y", type=arc_arg, required=True)
    ext.set_defaults(handler=run_ext)
