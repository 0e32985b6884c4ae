"""
Spherical Arcs - Mutation and Graph Documents
Pydantic models for completion fans, approximation steps, mutation graphs and
enumeration results.
"""
from typing import List, Literal, Optional

from pydantic import Field

from spherical_arcs.models.schemas import (
    FORMAT_VERSION,
    ArcPair,
    BaseSchema,
    Boundary,
    ConfigClassValue,
    Direction,
    FanMethod,
    WindowSpec,
)


# ============================================
# Mutation
# ============================================

class FanOut(BaseSchema):
    at: ArcPair
    method: FanMethod
    completions: List[ArcPair]
    proper_replacements: List[ArcPair]


class FanReport(BaseSchema):
    format: Literal[1] = FORMAT_VERSION
    fan: FanOut
    oracle: Optional[FanOut] = None
    oracle_agrees: Optional[bool] = None


class ApproxStepOut(BaseSchema):
    s: ArcPair
    direction: Direction
    case: int
    e1: Optional[ArcPair] = None
    e2: Optional[ArcPair] = None
    s_prime: ArcPair
    s_star: ArcPair
    bracketed: bool = False


class ApproxReport(BaseSchema):
    format: Literal[1] = FORMAT_VERSION
    steps: List[ApproxStepOut]
    orbit: List[ArcPair]


# ============================================
# Graphs
# ============================================

class GraphNodeOut(BaseSchema):
    id: str
    label: str
    arcs: List[ArcPair]
    outer_isolated: int


class GraphEdgeOut(BaseSchema):
    source: str
    target: str
    removed: ArcPair
    added: ArcPair


class GraphDocument(BaseSchema):
    format: Literal[1] = FORMAT_VERSION
    w: int
    window: WindowSpec
    target_class: ConfigClassValue = Field(alias="class")
    nodes: List[GraphNodeOut]
    edges: List[GraphEdgeOut]
    connected_components: int


# ============================================
# Enumeration
# ============================================

class EnumReport(BaseSchema):
    format: Literal[1] = FORMAT_VERSION
    w: int
    window: WindowSpec
    boundary: Boundary
    target_class: ConfigClassValue = Field(alias="class")
    count: int
    nodes_visited: int
    diagrams: Optional[List[List[ArcPair]]] = None
