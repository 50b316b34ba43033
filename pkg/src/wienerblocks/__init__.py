"""Exact Wiener index computations for graphs built from blocks."""

from .blocks import block_count, block_decomposition, blocks_tree, classify
from .canon import canonical_graph6, canonical_label, is_isomorphic
from .compose import CompositeSpec, Part, amalgam, chain, materialize, wiener_chain, wiener_pair
from .enumeration import enumerate_biconnected, enumerate_connected
from .families import FamilyParams, cycle, path, spider, theta, two_cycles_path
from .graph import (
    DisconnectedGraphError,
    Graph,
    GraphError,
    distance_vector,
    graph6_decode,
    graph6_encode,
    make_graph,
    transmission,
    wiener,
)
from .rewrites import hill_climb
from .search import max_wiener_blocks

__all__ = [
    "CompositeSpec", "DisconnectedGraphError", "FamilyParams", "Graph", "GraphError", "Part",
    "amalgam", "block_count", "block_decomposition", "blocks_tree", "canonical_graph6",
    "canonical_label", "chain", "classify", "cycle", "distance_vector", "enumerate_biconnected",
    "enumerate_connected", "graph6_decode", "graph6_encode", "hill_climb", "is_isomorphic",
    "make_graph", "materialize", "max_wiener_blocks", "path", "spider", "theta", "transmission",
    "two_cycles_path", "wiener", "wiener_chain", "wiener_pair",
]
