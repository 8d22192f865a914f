from .canon import canonical_form, canonical_graph, canonical_labeling, is_isomorphic
from .core import (
    Graph,
    bfs_distances,
    complete,
    complete_bipartite,
    components,
    cycle,
    diameter,
    disjoint_union,
    double_star,
    empty,
    induced,
    is_connected,
    is_tree,
    iter_bits,
    leaves,
    path,
    star,
)
from .enumerate import enumerate_connected, enumerate_trees
from .graph6 import Graph6Error, from_graph6, read_graph6, to_graph6

__all__ = [
    "Graph",
    "Graph6Error",
    "bfs_distances",
    "canonical_form",
    "canonical_graph",
    "canonical_labeling",
    "complete",
    "complete_bipartite",
    "components",
    "cycle",
    "diameter",
    "disjoint_union",
    "double_star",
    "empty",
    "enumerate_connected",
    "enumerate_trees",
    "from_graph6",
    "induced",
    "is_connected",
    "is_isomorphic",
    "is_tree",
    "iter_bits",
    "leaves",
    "path",
    "read_graph6",
    "star",
    "to_graph6",
]
