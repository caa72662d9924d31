"""Instrumented exact triangle counting on lower-triangular CSR graphs.

The package counts triangles by intersecting sorted lower neighborhoods once
per edge, with two interchangeable kernels — a scalar merge loop and an 8x8
blocked all-pairs variant with early termination — and full work counters
(match checks, advances, raw block comparisons) for performance analysis.
A compiled extension provides the hot loops when available; a pure-Python
twin with identical counter semantics is always present as a fallback.
"""

from .counting import CountReport, KernelChoice, count_triangles, measure_count, traversed_edges
from .generate import (
    complete_graph,
    cycle_graph,
    gnp_graph,
    interleaved_fixture,
    path_graph,
    star_graph,
    star_heavy_graph,
)
from .graph import (
    CsrGraph,
    EdgeList,
    GraphInputError,
    ValidationError,
    apply_permutation,
    canonicalize,
    load_edge_list,
    load_matrix_market,
    validate_csr,
)
from .kernels import (
    ConsistencyError,
    IntersectStats,
    active_backend,
    available_backends,
    blocked_intersect,
    effective_checks,
    scalar_intersect,
)
from .metrics import MetricRecord, MetricsError, derive_metrics, emit_records, read_records, untimed_record
from .oracle import brute_force_intersection, brute_force_triangles
from .reorder import Permutation, SortOrder, make_permutation, total_degrees

__version__ = "0.1.0"

__all__ = [
    "CountReport",
    "CsrGraph",
    "ConsistencyError",
    "EdgeList",
    "GraphInputError",
    "IntersectStats",
    "KernelChoice",
    "MetricRecord",
    "MetricsError",
    "Permutation",
    "SortOrder",
    "ValidationError",
    "active_backend",
    "apply_permutation",
    "available_backends",
    "blocked_intersect",
    "brute_force_intersection",
    "brute_force_triangles",
    "canonicalize",
    "complete_graph",
    "count_triangles",
    "cycle_graph",
    "derive_metrics",
    "effective_checks",
    "emit_records",
    "gnp_graph",
    "interleaved_fixture",
    "load_edge_list",
    "load_matrix_market",
    "make_permutation",
    "measure_count",
    "path_graph",
    "read_records",
    "scalar_intersect",
    "star_graph",
    "star_heavy_graph",
    "total_degrees",
    "traversed_edges",
    "untimed_record",
    "validate_csr",
    "__version__",
]
