"""Exact-arithmetic toolkit for hard-core configurations on the triangular lattice."""

from .eisenstein import (
    DiameterClass,
    EisensteinFactorization,
    EisensteinInteger,
    case_lists,
    classify_diameter,
    factor_eisenstein,
    factor_rational_prime,
    ground_state_count,
    is_attainable,
    loeschian_representations,
)
from .errors import (
    BoundaryTouching,
    CoordinateOverflow,
    HctError,
    IncompatibleFamily,
    InvalidViewport,
    NoAdmissiblePairs,
    NotAttainable,
    NotDecomposable,
    OutOfDomain,
    OutOfRegion,
    SixTupleFound,
    UnknownFamily,
    ZeroElement,
)
from .lattice import (
    GroundStateDescriptor,
    Sublattice,
    common_parallelogram_index,
    dist_squared,
    embed,
    enumerate_ground_states,
    reflect,
    rotate60,
    six_neighbors,
    sublattice_contains,
    torus_distance_squared,
)
from .configurations import (
    Configuration,
    ContourSupport,
    contour_supports,
    emit_configuration,
    from_ground_state,
    is_admissible,
    parse_configuration,
    phi_correct_parallelogram,
    phi_correct_site,
)
from .excitations import (
    DefectCounts,
    count_defects,
    enumerate_pair_defects,
    insertable_sites_in_triangle,
    pairable_insertable_sites,
    third_vertex,
)
from .forces import (
    ForceFamily,
    PropernessReport,
    builtin_force_family,
    distances_in_disk,
    emit_force_family,
    min_delta_nondeletable,
    parse_force_family,
    verify_inserted_lens_types,
    verify_inserted_triangle_types,
    verify_removed_types,
)
from .scanner import ScanRow, heuristic_class, rows_to_csv, scan_dominance
from .svg import RenderSpec, render_svg

__version__ = "0.1.0"
