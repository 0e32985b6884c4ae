"""
Spherical Arcs - nc / render Commands
"""
import argparse
import sys
from pathlib import Path

from spherical_arcs.commands.common import emit, load
from spherical_arcs.config import get_settings
from spherical_arcs.models.schemas import NcPartitionOut, NcReport, RenderFormat
from spherical_arcs.services.noncrossing import NcPartition, NoncrossingService
from spherical_arcs.services.ptolemy_closure import closure
from spherical_arcs.services.rendering import DiagramRenderer, RenderSpec


def _partition_out(partition: NcPartition) -> NcPartitionOut:
    return NcPartitionOut(blocks=partition.halves(), escaping=sorted(partition.escaping))


def _format_blocks(partition: NcPartition) -> str:
    parts = []
    for i, block in enumerate(partition.halves()):
        mark = "*" if i in partition.escaping else ""
        parts.append("{" + ", ".join(f"{p:g}" for p in block) + "}" + mark)
    return " ".join(parts)


def run_nc(args: argparse.Namespace) -> int:
    diagram = load(args, args.file)
    if diagram.is_periodic:
        k = get_settings().periodic_context_periods
        diagram = diagram.restrict(-k * diagram.period, (k + 1) * diagram.period - 1)
    agreement = NoncrossingService().sms_iff_finite_blocks(diagram)
    result = agreement.result
    report = NcReport(
        nc=_partition_out(result.nc),
        kreweras=_partition_out(result.kreweras),
        riedtmann=agreement.riedtmann,
        is_sms=agreement.is_sms,
        all_blocks_finite=agreement.all_blocks_finite,
        agree=agreement.agree,
    )
    text = "\n".join([
        f"nc: {_format_blocks(result.nc)}",
        f"kreweras: {_format_blocks(result.kreweras)}",
        f"sms: {agreement.is_sms}  all blocks finite: {agreement.all_blocks_finite}  agree: {agreement.agree}",
    ])
    emit(args, report, text + "\n(* escaping block)")
    return 0


def run_render(args: argparse.Namespace) -> int:
    diagram = load(args, args.file)
    derived = closure(diagram.w, diagram.arcs).arcs if args.closure else ()
    spec = RenderSpec(format=args.format, unit=args.unit, labels=not args.no_labels)
    output = DiagramRenderer().render(diagram, spec, derived)
    if args.out:
        Path(args.out).write_bytes(output)
    else:
        sys.stdout.buffer.write(output)
        sys.stdout.flush()
    return 0


def register(subparsers, parents) -> None:
    nc = subparsers.add_parser("nc", parents=parents, help="noncrossing partition and Kreweras complement (w = -1)")
    nc.add_argument("file")
    nc.set_defaults(handler=run_nc)

    render = subparsers.add_parser("render", parents=parents, help="draw a diagram as SVG or ASCII")
    render.add_argument("file")
    render.add_argument("--format", type=RenderFormat, default=RenderFormat.SVG, choices=list(RenderFormat))
    render.add_argument("--out", default=None)
    render.add_argument("--unit", type=int, default=None, help="pixels per vertex")
    render.add_argument("--no-labels", dest="no_labels", action="store_true")
    render.add_argument("--closure", action="store_true", help="also draw the closure arcs, dotted")
    render.set_defaults(handler=run_render)
