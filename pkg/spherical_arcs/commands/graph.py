"""
Spherical Arcs - graph / enumerate Commands
"""
import argparse
from pathlib import Path

from spherical_arcs.commands.common import emit, fmt_arcs, require_w, window_arg
from spherical_arcs.models.graph_schemas import EnumReport
from spherical_arcs.models.schemas import Boundary, ConfigClassValue, EmitMode, EnumRequest, WindowSpec
from spherical_arcs.services.enumeration import EnumerationService
from spherical_arcs.services.mutation_graph import MutationGraphService


def run_graph(args: argparse.Namespace) -> int:
    w = require_w(args)
    lo, hi = args.window
    service = MutationGraphService()
    graph = service.build(w, lo, hi, args.boundary, args.target_class, args.max_nodes)
    document = service.to_document(graph)

    if args.out:
        Path(args.out).write_text(service.to_node_link(graph) + "\n", encoding="utf-8")
    if args.dot:
        Path(args.dot).write_text(service.to_dot(graph), encoding="utf-8")

    lines = [
        f"nodes: {graph.number_of_nodes()}",
        f"edges: {graph.number_of_edges()}",
        f"connected components: {document.connected_components}",
    ]
    for node in document.nodes:
        lines.append(f"  {node.id} [outer-isolated {node.outer_isolated}]: {node.label}")
    emit(args, document, "\n".join(lines))
    return 0


def run_enumerate(args: argparse.Namespace) -> int:
    w = require_w(args)
    lo, hi = args.window
    request = EnumRequest(
        w=w, lo=lo, hi=hi, boundary=args.boundary, target_class=args.target_class,
        emit=args.emit, cap=args.cap,
    )
    result = EnumerationService().enumerate(request)
    listing = [list(d.key()) for d in result.diagrams] if request.emit is EmitMode.LIST else None
    report = EnumReport(
        w=w,
        window=WindowSpec(lo=lo, hi=hi, boundary=args.boundary),
        boundary=args.boundary,
        target_class=args.target_class,
        count=result.count,
        nodes_visited=result.nodes_visited,
        diagrams=listing,
    )
    lines = [f"count: {result.count}"]
    if listing is not None:
        lines.extend(fmt_arcs(d.sorted_arcs) for d in result.diagrams)
    emit(args, report, "\n".join(lines))
    return 0


def _window_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--window", type=window_arg, required=True, help="lo..hi")
    parser.add_argument("--boundary", type=Boundary, default=Boundary.SEALED, choices=list(Boundary))
    parser.add_argument("--class", dest="target_class", type=ConfigClassValue,
                        default=ConfigClassValue.SMS, choices=list(ConfigClassValue))


def register(subparsers, parents) -> None:
    graph = subparsers.add_parser("graph", parents=parents, help="mutation graph of a class on a window")
    _window_flags(graph)
    graph.add_argument("--out", default=None, help="write the JSON graph document here")
    graph.add_argument("--dot", default=None, help="write a DOT export here")
    graph.add_argument("--max-nodes", dest="max_nodes", type=int, default=None)
    graph.set_defaults(handler=run_graph)

    enum = subparsers.add_parser("enumerate", parents=parents, help="exhaustive enumeration of a class on a window")
    _window_flags(enum)
    enum.add_argument("--emit", type=EmitMode, default=EmitMode.COUNT, choices=list(EmitMode))
    enum.add_argument("--cap", type=int, default=None, help="search node budget")
    enum.set_defaults(handler=run_enumerate)
