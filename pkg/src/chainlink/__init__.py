"""Chainlink polytopes, fence posets and their rank polynomials, in exact arithmetic."""

from .errors import CapExceeded, ChainlinkError, ConsistencyError, PreconditionError, UnboundedError
from .qpoly import QPolynomial, analyze_modality, analyze_symmetry, count_peaks, gaussian_binomial
from .posets import (
    FinitePoset,
    OrientedPoset,
    build_chainlink_poset,
    build_circular_fence,
    build_fence,
    build_stretched_chainlink,
    rank_polynomial_bruteforce,
)
from .transfer import (
    RankMatrix,
    alternating_trace,
    box_matrix,
    chainlink_rank_polynomial,
    circular_fence_rank_polynomial,
    down_matrix,
    up_matrix,
    verify_matrix_identities,
)
from .geometry import (
    HPolytope,
    build_chainlink_hrep,
    build_general_fence_polytope,
    build_order_polytope,
    combinatorial_structure,
    count_lattice_points,
    enumerate_lattice_points,
    enumerate_vertices,
    section_vertices,
    vertex_count_trace,
    volume_inclusion_exclusion,
    volume_trace,
)
from .ehrhart import (
    QuasiPolynomial,
    check_complementary_symmetry,
    count_dilated_section,
    fit_section_quasipolynomial,
    full_ehrhart_polynomial,
    relative_volume,
)
from .analysis import ScanResult, stretch_analysis, unimodality_scan, verify_rank_recurrence

__version__ = "0.1.0"
