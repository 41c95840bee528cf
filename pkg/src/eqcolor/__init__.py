"""Exact equitable colorings of complete multipartite graphs and of their
Kronecker products with complete graphs: closed-form values, witness
constructions, and an independent brute-force oracle."""

from ._search import DEFAULT_BACKEND, available_backends
from .closedform import (
    ProductSpec,
    ThresholdReport,
    equitable_number_multipartite,
    equitable_number_product,
    equitable_threshold_multipartite,
    equitable_threshold_product,
    h_multipartite,
    h_star_product,
    lin_chang_bound,
    multipartite_colorable,
    product_colorable,
)
from .colorer import (
    NoStepAvailable,
    SimultaneousPartition,
    color_multipartite,
    color_product,
    coloring_from_partition,
    increment_coloring,
    simultaneous_partition,
)
from .errors import FormatError, OutOfScopeError, SearchBudgetExceeded
from .graphs import (
    ClassShape,
    Coloring,
    Graph,
    VerifyResult,
    build_multipartite,
    build_product,
    classify_class,
    coloring_from_text,
    coloring_to_json,
    coloring_to_slines,
    graph_from_dimacs,
    graph_to_dimacs,
    has_critical_class_sizes,
    product_coords,
    product_index,
    verify_coloring,
)
from .oracle import OracleResult, chi_eq_exact, chi_eq_star_exact, k_colorable
from .partitions import (
    QPartition,
    addend_count_bounds,
    enumerate_q_partitions,
    maximal_q_partition,
    minimal_q_partition,
    q_partition_exists,
    split_step,
)

__version__ = "0.1.0"

__all__ = [
    "ClassShape",
    "Coloring",
    "DEFAULT_BACKEND",
    "FormatError",
    "Graph",
    "NoStepAvailable",
    "OracleResult",
    "OutOfScopeError",
    "ProductSpec",
    "QPartition",
    "SearchBudgetExceeded",
    "SimultaneousPartition",
    "ThresholdReport",
    "VerifyResult",
    "addend_count_bounds",
    "available_backends",
    "build_multipartite",
    "build_product",
    "chi_eq_exact",
    "chi_eq_star_exact",
    "classify_class",
    "color_multipartite",
    "color_product",
    "coloring_from_partition",
    "coloring_from_text",
    "coloring_to_json",
    "coloring_to_slines",
    "enumerate_q_partitions",
    "equitable_number_multipartite",
    "equitable_number_product",
    "equitable_threshold_multipartite",
    "equitable_threshold_product",
    "graph_from_dimacs",
    "graph_to_dimacs",
    "h_multipartite",
    "h_star_product",
    "has_critical_class_sizes",
    "increment_coloring",
    "k_colorable",
    "lin_chang_bound",
    "maximal_q_partition",
    "minimal_q_partition",
    "multipartite_colorable",
    "product_colorable",
    "product_coords",
    "product_index",
    "q_partition_exists",
    "simultaneous_partition",
    "split_step",
    "verify_coloring",
]
