"""
Spherical Arcs - Mutation Graph Service
Graphs whose nodes are all configurations of a class on a window and whose edges
are single-arc replacements, with JSON and DOT exports.
"""
import logging
from typing import Dict, Optional

import networkx as nx
from networkx.drawing.nx_pydot import to_pydot

from spherical_arcs.config import get_settings
from spherical_arcs.exceptions import SphericalArcsError
from spherical_arcs.models.graph_schemas import GraphDocument, GraphEdgeOut, GraphNodeOut
from spherical_arcs.models.schemas import Boundary, ConfigClassValue, EmitMode, EnumRequest, WindowSpec
from spherical_arcs.services.arc_core import WeightLike, as_weight
from spherical_arcs.services.configurations import Diagram, vertex_report
from spherical_arcs.services.enumeration import EnumerationCapExceeded, EnumerationService
from spherical_arcs.services.mutation import MutationService

logger = logging.getLogger(__name__)


class GraphBudgetExceeded(SphericalArcsError):
    """Raised when a mutation graph would exceed its node budget; carries the partial graph."""

    def __init__(self, partial: nx.Graph, max_nodes: int):
        self.partial = partial
        self.max_nodes = max_nodes
        super().__init__(f"mutation graph exceeds {max_nodes} nodes")


def _label(diagram: Diagram) -> str:
    return " ".join(str(a) for a in diagram.sorted_arcs) or "{}"


class MutationGraphService:
    """Builds mutation graphs on top of the enumerator and the completion fans."""

    def __init__(self):
        self.settings = get_settings()
        self.enumeration = EnumerationService()
        self.mutation = MutationService()

    def build(
        self,
        w: WeightLike,
        lo: int,
        hi: int,
        boundary: Boundary = Boundary.SEALED,
        target: ConfigClassValue = ConfigClassValue.SMS,
        max_nodes: Optional[int] = None,
    ) -> nx.Graph:
        """
        Raises:
            GraphBudgetExceeded: If the class has more diagrams on the window than max_nodes
        """
        weight = as_weight(w)
        max_nodes = max_nodes or self.settings.graph_max_nodes
        request = EnumRequest(
            w=weight.w, lo=lo, hi=hi, boundary=boundary, target_class=target,
            emit=EmitMode.LIST, cap=self.settings.enumeration_cap,
        )
        graph = nx.Graph(w=weight.w, lo=lo, hi=hi, boundary=Boundary(boundary).value, target=ConfigClassValue(target).value)
        try:
            diagrams = self.enumeration.enumerate(request).diagrams
        except EnumerationCapExceeded as exc:
            self._add_nodes(graph, exc.partial[:max_nodes])
            raise GraphBudgetExceeded(graph, max_nodes) from exc

        if len(diagrams) > max_nodes:
            self._add_nodes(graph, diagrams[:max_nodes])
            raise GraphBudgetExceeded(graph, max_nodes)

        ids = self._add_nodes(graph, diagrams)
        for diagram in diagrams:
            source_id = ids[diagram.key()]
            for s in diagram.sorted_arcs:
                for c in self.mutation.completions_at(diagram, s).proper_replacements:
                    target_id = ids.get(diagram.replace(s, c).key())
                    if target_id is None or graph.has_edge(source_id, target_id):
                        continue
                    graph.add_edge(source_id, target_id, removed=s.as_pair(), added=c.as_pair())

        logger.info(
            "mutation graph w=%s [%s,%s]: %d nodes, %d edges, %d components",
            weight.w, lo, hi, graph.number_of_nodes(), graph.number_of_edges(),
            nx.number_connected_components(graph) if graph else 0,
        )
        return graph

    def _add_nodes(self, graph: nx.Graph, diagrams) -> Dict[tuple, str]:
        ids = {}
        for i, diagram in enumerate(diagrams):
            node_id = f"d{i}"
            ids[diagram.key()] = node_id
            graph.add_node(
                node_id,
                label=_label(diagram),
                arcs=[list(pair) for pair in diagram.key()],
                outer_isolated=len(vertex_report(diagram).outer),
            )
        return ids

    def to_document(self, graph: nx.Graph) -> GraphDocument:
        nodes = [
            GraphNodeOut(id=n, label=data["label"], arcs=[tuple(p) for p in data["arcs"]], outer_isolated=data["outer_isolated"])
            for n, data in graph.nodes(data=True)
        ]
        edges = [
            GraphEdgeOut(source=u, target=v, removed=data["removed"], added=data["added"])
            for u, v, data in graph.edges(data=True)
        ]
        return GraphDocument(
            w=graph.graph["w"],
            window=WindowSpec(lo=graph.graph["lo"], hi=graph.graph["hi"], boundary=graph.graph["boundary"]),
            target_class=graph.graph["target"],
            nodes=nodes,
            edges=edges,
            connected_components=nx.number_connected_components(graph) if graph else 0,
        )

    def to_node_link(self, graph: nx.Graph) -> str:
        return self.to_document(graph).model_dump_json(by_alias=True, indent=2)

    def to_dot(self, graph: nx.Graph) -> str:
        # pydot wants string attributes
        flat = nx.Graph(name="mutation_graph")
        for n, data in graph.nodes(data=True):
            flat.add_node(n, label=f'"{data["label"]}"', outer_isolated=str(data["outer_isolated"]))
        for u, v, data in graph.edges(data=True):
            flat.add_edge(u, v, label=f'"{data["removed"]} -> {data["added"]}"')
        return to_pydot(flat).to_string()


def mutation_graph(
    w: WeightLike,
    lo: int,
    hi: int,
    boundary: Boundary = Boundary.SEALED,
    target: ConfigClassValue = ConfigClassValue.SMS,
    max_nodes: Optional[int] = None,
) -> nx.Graph:
    return MutationGraphService().build(w, lo, hi, boundary, target, max_nodes)
