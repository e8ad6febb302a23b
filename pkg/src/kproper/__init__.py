"""Partitions of graphs into parts that each induce a k-connected subgraph.

The main entry points are :func:`two_proper_partition` (block-cut tree
construction, k = 2) and :func:`k_proper_partition_greedy` (any k >= 2).
Every returned partition is re-certified part by part.
"""

from .augment import Augmentation, EditBound, edit_distance_upper_bound, k_connect_by_matchings
from .blocktree import BlockCutTree, build_block_cut_tree, end_blocks, root_at, subtree_graph, x_set
from .connectivity import (
    BlockDecomposition,
    ConnectivityCertificate,
    biconnected_components,
    dense_subgraph_connectivity_bound,
    is_k_connected,
    k_core,
    local_vertex_connectivity,
    vertex_connectivity,
)
from .errors import DomainError, FormatError, Infeasible
from .extremal import ExtremalSpec, apex_counterexample, join_tightness
from .formats import parse_graph, parse_partition, serialize_graph, serialize_partition
from .graph import (
    Graph,
    average_degree,
    disjoint_union,
    from_edge_list,
    induced_subgraph,
    join,
    min_degree,
    remove_vertices,
)
from .greedy import GreedyParams, GreedyTrace, bound_report, extract_max_k_connected, k_proper_partition_greedy
from .partition import Partition, check_partition
from .two_proper import extendable_partition, find_anchor_block, two_proper_partition

__version__ = "0.1.0"
