"""bclayout: bijective-connection graphs, their edge-isoperimetric profile,
and certified minimum linear arrangements."""

from .core import (
    BcGraph,
    ConstructionTree,
    DEFAULT_DIMENSION_CAP,
    DimensionCapError,
    Graph,
    Leaf,
    MAX_DIMENSION_CAP,
    Node,
    ValidationReport,
    compose,
    materialize,
    validate,
)
from .families import (
    FamilySpec,
    KINDS,
    RESERVED_KINDS,
    hypercube,
    locally_twisted,
    mobius,
    random_bc,
)
from .families import build as build_family
from .isoperimetric import (
    BinaryDecomposition,
    ENUMERATION_LIMIT,
    EnumerationLimitError,
    SubsetWitness,
    binary_decomposition,
    brute_force_max_induced,
    brute_force_min_boundary,
    brute_force_tables,
    edge_boundary,
    edge_boundary_expanded,
    max_induced_edges,
    sum_edge_boundary,
)
from .layout import (
    BRANCH_AND_BOUND_VERTEX_LIMIT,
    CutProfile,
    EXHAUSTIVE_VERTEX_LIMIT,
    ExactResult,
    LayoutReport,
    LinearArrangement,
    SolverLimitError,
    arrangement_cost,
    bc_arrangement,
    certify,
    cross_matching_cost,
    cut_profile,
    evaluate_arrangement,
    lower_bound_closed,
    lower_bound_generic,
    minla_exact,
    random_arrangement,
)
from .rng import SplitMix64

__version__ = "0.1.0"

__all__ = [
    "BcGraph",
    "BinaryDecomposition",
    "BRANCH_AND_BOUND_VERTEX_LIMIT",
    "ConstructionTree",
    "CutProfile",
    "DEFAULT_DIMENSION_CAP",
    "DimensionCapError",
    "ENUMERATION_LIMIT",
    "EnumerationLimitError",
    "EXHAUSTIVE_VERTEX_LIMIT",
    "ExactResult",
    "FamilySpec",
    "Graph",
    "KINDS",
    "LayoutReport",
    "Leaf",
    "LinearArrangement",
    "MAX_DIMENSION_CAP",
    "Node",
    "RESERVED_KINDS",
    "SolverLimitError",
    "SplitMix64",
    "SubsetWitness",
    "ValidationReport",
    "arrangement_cost",
    "bc_arrangement",
    "binary_decomposition",
    "brute_force_max_induced",
    "brute_force_min_boundary",
    "brute_force_tables",
    "build_family",
    "certify",
    "compose",
    "cross_matching_cost",
    "cut_profile",
    "edge_boundary",
    "edge_boundary_expanded",
    "evaluate_arrangement",
    "hypercube",
    "locally_twisted",
    "lower_bound_closed",
    "lower_bound_generic",
    "materialize",
    "max_induced_edges",
    "minla_exact",
    "mobius",
    "random_arrangement",
    "random_bc",
    "sum_edge_boundary",
    "validate",
]
