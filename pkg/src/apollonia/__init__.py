"""Oriented Apollonius tangency solver on normalized circle coefficients."""

from .circle_core import (
    CircleCoeffs,
    Coincidence,
    CurvatureElement,
    LinearElement,
    Point,
    circle_from_center_radius,
    circle_from_element,
    circle_from_quadruple,
    circle_from_spec,
    coincidence_test,
    element_nearest_origin,
    evaluate_n,
    line_from_point_angle,
    reverse,
    signed_distance,
)
from .invariants import (
    ConfigClass,
    ConfigTag,
    PairRelation,
    PencilType,
    TripleSummary,
    classify_triple,
    minors,
    q_pair,
    q_value,
    radical_center_axis,
    similarity,
    triple_summary,
)
from .apollonius import (
    Family,
    FamilyKind,
    NonOrientedReport,
    SolutionSet,
    descartes_curvatures,
    enumerate_nonoriented,
    oracle_nonoriented,
    solve_oriented,
    tangency_point,
)
from .isogonal import (
    Branch,
    IsogonalQuery,
    cross_angle,
    g_degenerate_report,
    pencil_type,
    solve_isogonal,
)
from .transforms import (
    CanonicalPair,
    ConicParams,
    FrameMap,
    apply_frame,
    canonical_frame,
    canonical_q,
    conic_params,
    invert_in_circle,
    pencil_member,
    tangent_family,
)

__version__ = "0.1.0"
