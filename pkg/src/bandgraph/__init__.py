"""Bandwidth mathematics for graphs of bounded-span k-sets.

Vertices are the k-element subsets of {0..n} whose span (max - min) is
at most b; two sets are adjacent when their union also has span at most
b.  The package constructs these graphs, numbers their vertices with the
orderings whose bandwidth is known or conjectured extremal, evaluates
the exact finite-n bandwidth formulas and the asymptotic growth
coefficients, computes the polygon measures behind those coefficients in
exact rational arithmetic, and exposes the hypergraph transformation
that turns edge clique covers into vertex clique covers.
"""

from .bounds import (
    BetaDecomposition,
    Coefficients,
    asymptotic_coefficient_interval,
    beta_decomposition,
    central_lower_bound,
    coefficients,
    density_lower_bound,
    exact_bandwidth_large_b,
    lex_upper_bound_value,
    unresolved_beta_measure,
)
from .core_graph import (
    Params,
    SpanClass,
    Vertex,
    are_adjacent,
    central_count,
    class_size,
    diameter,
    distance_upper_bound,
    enumerate_vertices,
    graph_distance_bfs,
    interval_distance,
    is_central,
    is_vertex,
    span_classes,
    vertex_count_formula,
)
from .geometry import (
    GeometryError,
    IdentityCheck,
    IdentityReport,
    LandmarkPoints,
    Polygon,
    RatPoint,
    band_polygon,
    landmark_points,
    omega_polygon,
    polygon_measure,
    region_vertex_count,
    trapezoid_measure,
    verify_identities,
)
from .hypergraph import (
    CapacityError,
    Hypergraph,
    SimpleGraph,
    check_cover_equivalence,
    format_hypergraph,
    hypergraph_numbering_bandwidth,
    is_weak_clique,
    maximal_banded_hypergraph,
    parse_hypergraph,
    transform_equals_band_graph,
    two_section,
    vertex_clique_cover_number,
    weak_edge_clique_cover_number,
    weak_edge_clique_graph,
)
from .numbering import (
    MirrorPartition,
    Numbering,
    bandwidth_by_edge_scan,
    bandwidth_of_numbering,
    custom_numbering,
    high_remainder_numbering,
    lex_numbering,
    low_remainder_numbering,
    mirror_numbering,
    mirror_partition,
)
from .solver import (
    Certificate,
    band_graph_as_simple_graph,
    certify,
    exact_bandwidth,
    exact_bandwidth_with_witness,
)
from .suites import Check, SuiteResult, run_suite, suite_names

__version__ = "0.1.0"

__all__ = [
    "BetaDecomposition",
    "CapacityError",
    "Certificate",
    "Check",
    "Coefficients",
    "GeometryError",
    "Hypergraph",
    "IdentityCheck",
    "IdentityReport",
    "LandmarkPoints",
    "MirrorPartition",
    "Numbering",
    "Params",
    "Polygon",
    "RatPoint",
    "SimpleGraph",
    "SpanClass",
    "SuiteResult",
    "Vertex",
    "are_adjacent",
    "asymptotic_coefficient_interval",
    "band_graph_as_simple_graph",
    "band_polygon",
    "bandwidth_by_edge_scan",
    "bandwidth_of_numbering",
    "beta_decomposition",
    "central_count",
    "central_lower_bound",
    "certify",
    "check_cover_equivalence",
    "class_size",
    "coefficients",
    "custom_numbering",
    "density_lower_bound",
    "diameter",
    "distance_upper_bound",
    "enumerate_vertices",
    "exact_bandwidth",
    "exact_bandwidth_large_b",
    "exact_bandwidth_with_witness",
    "format_hypergraph",
    "graph_distance_bfs",
    "high_remainder_numbering",
    "hypergraph_numbering_bandwidth",
    "interval_distance",
    "is_central",
    "is_vertex",
    "is_weak_clique",
    "landmark_points",
    "lex_numbering",
    "lex_upper_bound_value",
    "low_remainder_numbering",
    "maximal_banded_hypergraph",
    "mirror_numbering",
    "mirror_partition",
    "omega_polygon",
    "parse_hypergraph",
    "polygon_measure",
    "region_vertex_count",
    "run_suite",
    "span_classes",
    "suite_names",
    "transform_equals_band_graph",
    "trapezoid_measure",
    "two_section",
    "unresolved_beta_measure",
    "verify_identities",
    "vertex_count_formula",
    "weak_edge_clique_cover_number",
    "weak_edge_clique_graph",
]
