"""Certified distance spectral radius computations for connected graphs.

The distance spectral radius of a connected graph is the largest eigenvalue
of its matrix of shortest-path lengths.  This package computes it with
certified two-sided brackets, constructs the extremal families that
minimize it under cut-vertex and cut-edge constraints, enumerates small
connected graphs up to isomorphism, and verifies the associated strict
inequalities by certified comparison.
"""

from .enumeration import (
    DEFAULT_MAX_N,
    ENV_MAX_N,
    EnumFilter,
    connected_graphs,
    count_connected,
    filtered_graphs,
    max_order,
)
from .graph6 import decode_graph6, encode_graph6
from .graphs import (
    BlockDecomposition,
    Graph,
    GraphError,
    PendantPath,
    bfs_distances,
    blocks,
    build_graph,
    canonical_key,
    cut_edges,
    cut_vertices,
    is_connected,
    pendant_paths,
    relabel,
)
from .jsonio import dumps
from .spectral import (
    DEFAULT_BRACKET_WIDTH,
    DEFAULT_COMPARE_WIDTH,
    MIN_BRACKET_WIDTH,
    BracketError,
    DistanceMatrix,
    PerronResult,
    Relation,
    SpectralOrdering,
    certified_compare,
    distance_matrix,
    perron,
    perron_json,
    perron_of,
    quadratic_form_delta,
    rayleigh_quotient,
)
from .transforms import (
    EdgePartition,
    GraftFamily,
    GraftSite,
    HypothesisError,
    RelocationSpec,
    attach_path,
    block_clique_closure,
    classify_by_edge,
    component_without,
    distance_dominates,
    find_witness,
    g_nk,
    graft,
    graft_family,
    k_nk,
    make_base,
    make_relocation_spec,
    relocate_edges,
    validate_relocation,
)
from .verify import (
    VerificationReport,
    report_json,
    sweep_graft,
    sweep_min_cut_edges,
    sweep_min_cut_vertices,
    sweep_monotonicity,
    sweep_pendant,
    sweep_perturbation,
    sweep_relocation,
    verify_distance_monotonicity,
    verify_graft_monotonicity,
    verify_min_cut_edges,
    verify_min_cut_vertices,
    verify_pendant_sum,
    verify_perturbation_bound,
    verify_relocation,
)

__version__ = "0.1.0"

__all__ = [
    "BlockDecomposition",
    "BracketError",
    "DEFAULT_BRACKET_WIDTH",
    "DEFAULT_COMPARE_WIDTH",
    "DEFAULT_MAX_N",
    "DistanceMatrix",
    "ENV_MAX_N",
    "EdgePartition",
    "EnumFilter",
    "Graph",
    "GraphError",
    "GraftFamily",
    "GraftSite",
    "HypothesisError",
    "MIN_BRACKET_WIDTH",
    "PendantPath",
    "PerronResult",
    "Relation",
    "RelocationSpec",
    "SpectralOrdering",
    "VerificationReport",
    "attach_path",
    "bfs_distances",
    "block_clique_closure",
    "blocks",
    "build_graph",
    "canonical_key",
    "certified_compare",
    "classify_by_edge",
    "component_without",
    "connected_graphs",
    "count_connected",
    "cut_edges",
    "cut_vertices",
    "decode_graph6",
    "distance_dominates",
    "distance_matrix",
    "dumps",
    "encode_graph6",
    "filtered_graphs",
    "find_witness",
    "g_nk",
    "graft",
    "graft_family",
    "is_connected",
    "k_nk",
    "make_base",
    "make_relocation_spec",
    "max_order",
    "pendant_paths",
    "perron",
    "perron_json",
    "perron_of",
    "quadratic_form_delta",
    "rayleigh_quotient",
    "relabel",
    "relocate_edges",
    "report_json",
    "sweep_graft",
    "sweep_min_cut_edges",
    "sweep_min_cut_vertices",
    "sweep_monotonicity",
    "sweep_pendant",
    "sweep_perturbation",
    "sweep_relocation",
    "validate_relocation",
    "verify_distance_monotonicity",
    "verify_graft_monotonicity",
    "verify_min_cut_edges",
    "verify_min_cut_vertices",
    "verify_pendant_sum",
    "verify_perturbation_bound",
    "verify_relocation",
]
