"""Contact representations of paths on a grid (CPG) and the G_k family."""

from .audit import AuditReport, VertexSetMismatch, audit_gk
from .contact import (
    A,
    B,
    CpgRepresentation,
    InvalidRepresentation,
    LabeledGraph,
    PointClass,
    PointKind,
    UnknownVertex,
    VertexId,
    Violation,
    ViolationCategory,
    classify_grid_point,
    contact_graph,
    max_bend,
    pure_members,
    validate,
)
from .gk import (
    GkParameters,
    RotationMismatch,
    build_representation,
    generate_gk,
    rotation_system_gk,
    trace_faces,
)
from .grid import (
    Direction,
    GridPath,
    GridPoint,
    MembershipClass,
    bend_points,
    classify_membership,
    make_path,
    path_cells,
)
from .search import SearchBounds, min_bend_number, search_representation

__version__ = "0.1.0"
