"""Linear-time transitive orientation of prime comparability graphs via LBFS
slices and ordered partition refinement."""

from .graph import (
    Graph,
    GraphError,
    fixture_g10,
    from_edge_list,
    orientation_from_order,
    parse_edge_list,
    read_edge_list,
    write_edge_list,
)
from .lbfs import LbfsResult, lbfs, lbfs_from, naive_lbfs_from
from .oracle import (
    enumerate_transitive_orientations,
    is_comparability_bruteforce,
    is_prime_bruteforce,
    is_valid_lbfs_order,
    verify_transitive,
)
from .orientation import (
    LinearExtensionResult,
    NotPrimeError,
    OrientationError,
    PipelineTrace,
    linear_extension,
    source_vertex,
    transitive_orientation,
)
from .partition import OrderedPartition, PartitionError
from .slices import SliceAnnotations, SliceError, SliceTree, analyze, build_slice_tree

__all__ = [
    "Graph",
    "GraphError",
    "LbfsResult",
    "LinearExtensionResult",
    "NotPrimeError",
    "OrderedPartition",
    "OrientationError",
    "PartitionError",
    "PipelineTrace",
    "SliceAnnotations",
    "SliceError",
    "SliceTree",
    "analyze",
    "build_slice_tree",
    "enumerate_transitive_orientations",
    "fixture_g10",
    "from_edge_list",
    "is_comparability_bruteforce",
    "is_prime_bruteforce",
    "is_valid_lbfs_order",
    "lbfs",
    "lbfs_from",
    "linear_extension",
    "naive_lbfs_from",
    "orientation_from_order",
    "parse_edge_list",
    "read_edge_list",
    "source_vertex",
    "transitive_orientation",
    "verify_transitive",
    "write_edge_list",
]
