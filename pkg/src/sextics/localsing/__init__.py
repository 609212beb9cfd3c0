"""Local analysis of plane curve singularities."""

from .points import (
    AlgebraicPoint,
    NotSquarefreeError,
    singular_points,
    translate_to_origin,
    specialize_x,
    point_on_curve,
)
from .germs import (
    InfiniteIntersectionError,
    NewtonFace,
    NewtonPolygon,
    germ_multiplicity,
    intersection_multiplicity,
    intersection_multiplicity_origin,
    milnor_number,
    milnor_number_origin,
    multiplicity,
    newton_polygon,
    nondegenerate_branches,
)
from .resolve import BranchCluster, Resolution, UnresolvedGermError, resolve
from .classify import (
    ConsistencyError,
    LocalSingularity,
    SingType,
    analyze_germ,
    analyze_point,
    build_signature_table,
    classify_germ,
    classify_signature,
    delta,
    delta_invariant,
    dual_branch,
    dual_branch_general,
    normal_form_germ,
    parametrization_characteristic,
    recognition_types,
    signature_of_germ,
)
