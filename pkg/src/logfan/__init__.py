"""Exact monoid, cone and fan combinatorics with a verification gallery."""

from .lattice import (
    AbelianQuotient,
    IntMatrix,
    cokernel,
    det,
    hnf,
    kernel_basis,
    primitive,
    snf,
)
from .cone import Cone, dual_cone, faces, hilbert_basis, intersect, is_smooth
from .fan import (
    Fan,
    FanMap,
    complete_2d,
    fiber_product,
    is_fan_map,
    product_fan,
    resolve_2d,
    search_refinement,
    star_subdivision,
    subdivision_predicates,
    support_query,
    validate,
)
from .monoid import (
    AffineMonoid,
    MonoidHom,
    amalgamated_sum,
    group_completion,
    is_exact,
    is_kummer,
    localize,
    membership,
    nth_root,
    quotient,
    saturation,
    structure_queries,
)
from .logpair import (
    ToricLogPair,
    admissible_blowup,
    boundary_strata_counts,
    is_log_modification,
    make_pair,
    product,
)
from .kato import (
    CharParam,
    chart_smoothness,
    kummer_cover_chart,
    omega1_rank,
    omega_rank_pair,
)
from .gallery import GalleryCase, run_gallery

__all__ = [
    "AbelianQuotient",
    "AffineMonoid",
    "CharParam",
    "Cone",
    "Fan",
    "FanMap",
    "GalleryCase",
    "IntMatrix",
    "MonoidHom",
    "ToricLogPair",
    "admissible_blowup",
    "amalgamated_sum",
    "boundary_strata_counts",
    "chart_smoothness",
    "cokernel",
    "complete_2d",
    "det",
    "dual_cone",
    "faces",
    "fiber_product",
    "group_completion",
    "hilbert_basis",
    "hnf",
    "intersect",
    "is_exact",
    "is_fan_map",
    "is_kummer",
    "is_log_modification",
    "is_smooth",
    "kernel_basis",
    "kummer_cover_chart",
    "localize",
    "make_pair",
    "membership",
    "nth_root",
    "omega1_rank",
    "omega_rank_pair",
    "primitive",
    "product",
    "product_fan",
    "quotient",
    "resolve_2d",
    "run_gallery",
    "saturation",
    "search_refinement",
    "snf",
    "star_subdivision",
    "structure_queries",
    "subdivision_predicates",
    "support_query",
    "validate",
]

__version__ = "0.1.0"
