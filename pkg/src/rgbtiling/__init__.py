"""R-tilings and RGB-tilings of maximal planar graphs and semi-MPGs."""

from .canal import (
    CanalLine,
    CanalSystem,
    Partition1324,
    bank_triangle_identity,
    boundary_matching,
    build_canal_system,
    cycle_black_parity_equivalence,
    deja_vu_edges,
    is_grand,
    orient_canal_system,
)
from .coloring import (
    VertexColoring,
    coloring_to_rgb,
    count_4colorings,
    degree4_reduction_demo,
    enumerate_4colorings,
    kempe_component,
    kempe_switch,
    tiling_to_coloring,
)
from .embedding import (
    Face,
    PlanarEmbedding,
    SemiMpg,
    build_embedding,
    canonical_code,
    classify,
    cut_along_cycle,
    find_nontrivial_cycles3,
    from_faces,
    triangulate,
)
from .errors import DomainError
from .generator import GenerationRun, enumerate_mpgs, flip_edge, insert_vertex
from .stats import black_quadrangulation, check_degree_bounds, degree_table, verify_euler_degree_identity
from .tiling import Color, Tiling, count_rgb_extensions, enumerate_r_tilings, extend_to_rgb, find_red_odd_cycle, red_components, validate

__version__ = "0.1.0"
