"""
Spherical Arcs - Pydantic Models
Enums shared by the services and the JSON documents read and written by the CLI.
"""
from enum import Enum
from typing import List, Literal, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator


FORMAT_VERSION = 1

ArcPair = Tuple[int, int]


# ============================================
# Enums
# ============================================

class Functor(str, Enum):
    SUSPENSION = "suspension"
    TAU = "tau"
    SERRE = "serre"


class RelationKind(str, Enum):
    STRICT_CROSS = "strict_cross"
    SHARED_VERTEX = "shared_vertex"
    NESTED = "nested"
    DISJOINT = "disjoint"


class Ext1Case(str, Enum):
    SIGMA_SHIFT = "sigma_shift"
    CROSS_PLUS = "cross_plus"
    CROSS_MINUS = "cross_minus"
    NBR_E1_PLUS = "nbr_e1_plus"
    NBR_E1_MINUS = "nbr_e1_minus"
    NBR_E2_MINUS = "nbr_e2_minus"
    NONE = "none"


class PtolemyClass(str, Enum):
    I = "I"
    II = "II"


class ClosurePolicy(str, Enum):
    CLASS_II_ONLY = "class_II_only"
    BOTH = "both"

    @classmethod
    def parse(cls, value: str) -> "ClosurePolicy":
        """Accept the CLI spelling 'class2' as well as the enum values."""
        if value in ("class2", "class_II", "II"):
            return cls.CLASS_II_ONLY
        return cls(value)


class Recursion(str, Enum):
    LEFT = "left"    # X * (X)_{n-1}
    RIGHT = "right"  # (X)_{n-1} * X


class Boundary(str, Enum):
    FREE = "free"
    SEALED = "sealed"


class DiagramMode(str, Enum):
    WINDOW = "window"
    PERIODIC = "periodic"


class VertexKind(str, Enum):
    ENDPOINT = "endpoint"
    INNER_ISOLATED = "inner_isolated"
    OUTER_ISOLATED = "outer_isolated"


class ConfigClassValue(str, Enum):
    INVALID = "invalid"
    ORTHOGONAL = "orthogonal"
    HOM_CONFIG = "hom_config"
    RIEDTMANN = "riedtmann"
    SMS = "sms"

    @property
    def rank(self) -> int:
        return _CLASS_ORDER.index(self)

    def at_least(self, other: "ConfigClassValue") -> bool:
        return self.rank >= ConfigClassValue(other).rank


_CLASS_ORDER = [
    ConfigClassValue.INVALID,
    ConfigClassValue.ORTHOGONAL,
    ConfigClassValue.HOM_CONFIG,
    ConfigClassValue.RIEDTMANN,
    ConfigClassValue.SMS,
]


class FountainVerdict(str, Enum):
    LEFT_FOUNTAIN = "left_fountain"
    RIGHT_FOUNTAIN = "right_fountain"
    FOUNTAIN = "fountain"
    BOUNDED = "bounded"
    UNKNOWN = "unknown"


class Direction(str, Enum):
    LEFT = "left"
    RIGHT = "right"


class FanMethod(str, Enum):
    CONSTRUCTIVE = "constructive"
    ORACLE = "oracle"


class RenderFormat(str, Enum):
    SVG = "svg"
    ASCII = "ascii"


class EmitMode(str, Enum):
    COUNT = "count"
    LIST = "list"


# ============================================
# Base Models
# ============================================

class BaseSchema(BaseModel):
    """Base schema with common configuration."""
    model_config = ConfigDict(from_attributes=True, populate_by_name=True)


# ============================================
# Diagram Documents
# ============================================

class WindowSpec(BaseSchema):
    lo: int
    hi: int
    boundary: Boundary = Boundary.FREE

    @model_validator(mode="after")
    def check_bounds(self) -> "WindowSpec":
        if self.lo > self.hi:
            raise ValueError("window lo must not exceed hi")
        return self


class DiagramDocument(BaseSchema):
    """On-disk diagram. `w` may be omitted when the caller supplies it."""
    format: Literal[1] = FORMAT_VERSION
    w: Optional[int] = Field(default=None, le=-1)
    mode: DiagramMode
    window: Optional[WindowSpec] = None
    period: Optional[int] = Field(default=None, ge=1)
    arcs: List[ArcPair] = Field(default_factory=list)

    @model_validator(mode="after")
    def check_mode_fields(self) -> "DiagramDocument":
        if self.mode == DiagramMode.WINDOW and self.window is None:
            raise ValueError("window mode requires a 'window' object")
        if self.mode == DiagramMode.PERIODIC and self.period is None:
            raise ValueError("periodic mode requires a 'period'")
        return self


class EnumRequest(BaseSchema):
    """Exhaustive search request over noncrossing arc sets in a window."""
    w: int = Field(le=-1)
    lo: int
    hi: int
    boundary: Boundary = Boundary.SEALED
    target_class: ConfigClassValue = Field(default=ConfigClassValue.SMS, alias="class")
    emit: EmitMode = EmitMode.COUNT
    cap: Optional[int] = Field(default=None, ge=1)

    @model_validator(mode="after")
    def check_request(self) -> "EnumRequest":
        if self.lo > self.hi:
            raise ValueError("window lo must not exceed hi")
        if self.target_class == ConfigClassValue.INVALID:
            raise ValueError("enumeration targets orthogonal collections or stronger")
        if self.target_class == ConfigClassValue.SMS and self.boundary != Boundary.SEALED:
            raise ValueError("simple-minded systems are enumerated in sealed windows")
        return self


# ============================================
# Report Documents
# ============================================

class ErrorDetail(BaseSchema):
    pointer: str
    message: str


class ErrorReport(BaseSchema):
    format: Literal[1] = FORMAT_VERSION
    error: str
    details: List[ErrorDetail] = Field(default_factory=list)


class VertexStatusOut(BaseSchema):
    vertex: int
    status: VertexKind
    arc: Optional[ArcPair] = None


class ViolationOut(BaseSchema):
    code: str
    message: str
    arcs: List[ArcPair] = Field(default_factory=list)
    vertices: List[int] = Field(default_factory=list)


class OrthogonalityOut(BaseSchema):
    passed: bool
    crossing_free: bool
    agrees: bool
    pairs_checked: int
    failures: List[str] = Field(default_factory=list)


class ClassificationReport(BaseSchema):
    format: Literal[1] = FORMAT_VERSION
    config_class: ConfigClassValue = Field(alias="class")
    violations: List[ViolationOut] = Field(default_factory=list)
    vertices: List[VertexStatusOut] = Field(default_factory=list)
    outer_isolated: List[int] = Field(default_factory=list)
    virtual_inner_isolated: List[int] = Field(default_factory=list)
    orthogonality: Optional[OrthogonalityOut] = None
    expected: Optional[ConfigClassValue] = None
    matches_expected: Optional[bool] = None


class ExtReport(BaseSchema):
    format: Literal[1] = FORMAT_VERSION
    w: int
    k: int
    x: ArcPair
    y: ArcPair
    dimension: int
    case: Optional[Ext1Case] = None
    middle: List[ArcPair] = Field(default_factory=list)


class LeveledArc(BaseSchema):
    arc: ArcPair
    level: int
    parents: Optional[Tuple[ArcPair, ArcPair]] = None


class ClosureReport(BaseSchema):
    format: Literal[1] = FORMAT_VERSION
    w: int
    policy: ClosurePolicy
    recursion: Recursion
    arcs: List[ArcPair]
    levels: Optional[List[LeveledArc]] = None


class FountainReportOut(BaseSchema):
    format: Literal[1] = FORMAT_VERSION
    w: int
    vertex: int
    depths: List[int]
    left_counts: List[int]
    right_counts: List[int]
    verdict: FountainVerdict
    one_sided: bool


class NcPartitionOut(BaseSchema):
    blocks: List[List[float]]
    escaping: List[int] = Field(default_factory=list)


class NcReport(BaseSchema):
    format: Literal[1] = FORMAT_VERSION
    nc: NcPartitionOut
    kreweras: NcPartitionOut
    riedtmann: bool
    is_sms: bool
    all_blocks_finite: bool
    agree: bool
