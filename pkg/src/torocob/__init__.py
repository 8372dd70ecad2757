"""Exact combinatorial models of locally standard torus orbifolds and
checkable equivariant-cobordism certificates between them."""

from .charfun import (
    CharFunction,
    FaceStratum,
    face_stratum,
    is_smooth,
    singular_strata,
    validate_characteristic,
    validate_r_characteristic,
)
from .cobordism import (
    CobordismCertificate,
    RelationStatement,
    RSCharFunction,
    boundary,
    cobordism_to_projective_spaces,
    find_lambda0,
    null_cobordism,
    restrict_to_marked,
    validate_rs_characteristic,
    verify_certificate,
    vertex_cut_certificate,
    vertex_cut_relation,
)
from .corners import (
    CornersComplex,
    FaceRecord,
    MarkedManifold,
    SurfaceInfo,
    build_surface_with_corners,
    cube,
    polygon,
    product_with_interval,
    simplex,
    validate_marked,
    validate_nice,
    vertex_cut,
    vertex_cut_bottom,
)
from .equivalence import EquivalenceWitness, check_witness, data_equivalent, invariant_screen
from .errors import TorocobError
from .families import (
    LensDescriptor,
    OrbifoldData,
    OrbifoldDescriptor,
    classify_simplex_base,
    connect_sum_2d,
    decompose_2d,
    disc_model,
    eyeshape_quotient,
    hirzebruch_bounds,
    lens_from_interval,
    make_orbifold,
)
from .lattice import (
    AbelianGroup,
    SmithDecomposition,
    is_basis_extendable,
    is_primitive,
    quotient_invariants,
    rank,
    saturation,
    smith_normal_form,
)
from .report import ValidityReport
from .serialize import canonical_serialize, parse

__version__ = "0.1.0"
