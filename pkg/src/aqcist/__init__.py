"""Augmented cubes and completely independent spanning trees.

Construct AQ_n, build families of completely independent spanning trees
(four for n >= 5, n-1 for n in {3, 4}), verify the defining property two
independent ways, and derive fault-tolerant multipath routes.
"""

from .errors import (
    AqcistError,
    BruteForceLimitError,
    InvalidVertexError,
    MalformedFamilyError,
    ModeDisagreementError,
    NotAdjacentError,
    TreeStructureError,
    UnsupportedDimensionError,
    VerificationFailedError,
)
from .families import CistFamily, base_family, search_family
from .lifting import connector_edge, construct_cists, lift_family, lift_tree
from .routing import disjoint_routes, route_stats, sample_pairs
from .serialize import dump_family, family_to_json, load_family, write_graph
from .topology import (
    AugmentedCube,
    EdgeKind,
    GraphStats,
    aq_edges,
    are_adjacent,
    build_recursive,
    classify_edge,
    graph_stats,
    neighbors,
)
from .tree import SpanningTree
from .verification import (
    VerificationReport,
    verify_bruteforce,
    verify_characterization,
    verify_family,
)

__version__ = "0.1.0"

__all__ = [
    "AqcistError",
    "AugmentedCube",
    "BruteForceLimitError",
    "CistFamily",
    "EdgeKind",
    "GraphStats",
    "InvalidVertexError",
    "MalformedFamilyError",
    "ModeDisagreementError",
    "NotAdjacentError",
    "SpanningTree",
    "TreeStructureError",
    "UnsupportedDimensionError",
    "VerificationFailedError",
    "VerificationReport",
    "aq_edges",
    "are_adjacent",
    "base_family",
    "build_recursive",
    "classify_edge",
    "connector_edge",
    "construct_cists",
    "disjoint_routes",
    "dump_family",
    "family_to_json",
    "graph_stats",
    "lift_family",
    "lift_tree",
    "load_family",
    "neighbors",
    "route_stats",
    "sample_pairs",
    "search_family",
    "verify_bruteforce",
    "verify_characterization",
    "verify_family",
    "write_graph",
]
