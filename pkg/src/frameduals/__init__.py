"""Graphic statics for 3D frames via dual loops in a 4D stress space.

Self-stress states of single-loop frame structures are encoded as
closed polygons in the space (phi, xi, eta, zeta); forces, total
moments and internal bending/torsional moments are read off as
pressure-scaled projected oriented areas of those polygons and of the
hybrid loops derived from them.
"""

from .bivector import (
    BASIS_PLANES,
    Bivector4,
    Loop4,
    Vec3,
    Vec4,
    hodge_dual_3,
    project,
    shoelace_area,
    wedge,
)
from .document import (
    DocumentError,
    DocumentModel,
    ProjectDocument,
    emit_document,
    parse_document,
)
from .frame import (
    ArcSegment,
    ClosureError,
    CutPoint,
    DualLoop,
    StraightSegment,
    StructuralLoop,
    build_rect_with_arcs,
    build_rectangle,
    position_at,
)
from .legendre import (
    DualPoint,
    DualSample,
    LinearStressFunction,
    SampledField,
    check_compatibility,
    diagram_of_stress,
    dual_loop_from_cells,
    dual_of_linear,
)
from .oracle import (
    ClassicalState,
    SuiteReport,
    classical_internal_moment,
    finite_difference_gradient,
    run_suite,
)
from .render import render_projections
from .resultants import (
    MomentIdentityError,
    StressResultant,
    decompose,
    force,
    hybrid_vertices,
    internal_moment,
    total_moment,
)

__version__ = "0.1.0"
