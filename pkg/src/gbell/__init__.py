"""Exact counts of non-equivalent colorings and the average number of colors."""

from .canon import canonical_key, is_isomorphic
from .engine import (Engine, EngineLimitError, average_colors, bt_of, oracle_s_vector,
                     refined_counts, s_vector)
from .graph import (Graph, add_edge, add_isolated, chromatic_number, complement, contract,
                    delete_edge, disjoint_union, is_simplicial, join, make_family, max_degree,
                    parse_edges, perfect_elimination_order, remove_vertex)
from .graph6 import from_graph6, to_graph6

__all__ = [
    "Engine", "EngineLimitError", "Graph", "add_edge", "add_isolated", "average_colors", "bt_of",
    "canonical_key", "chromatic_number", "complement", "contract", "delete_edge",
    "disjoint_union", "from_graph6", "is_isomorphic", "is_simplicial", "join", "make_family",
    "max_degree", "oracle_s_vector", "parse_edges", "perfect_elimination_order",
    "refined_counts", "remove_vertex", "s_vector", "to_graph6",
]
