"""Chordal graph recognition, clique trees, separator posets and reversible orderings."""

__version__ = "0.1.0"

from .cliquetree import (
    build_clique_tree,
    maximal_cliques,
    reduced_clique_graph,
    separator_multiset,
    verify_clique_tree,
)
from .graph import (
    DisconnectedGraphError,
    Graph,
    GraphError,
    ParseError,
    generate_random_chordal,
    is_clique,
    is_minimal_separator,
    parse_dimacs,
    parse_edge_list,
    parse_graph,
    separates,
)
from .minmax import (
    chain_reduction,
    containment_elimination_scheme,
    minmax_simplicial_vertices,
    pending_minmax_tree,
    search_counterexamples,
    separator_poset,
)
from .reversible import find_reversible_ordering, is_bisimplicial, is_proper_interval, is_reversible_ordering
from .search import (
    NotChordalError,
    is_chordal,
    is_simplicial_elimination_scheme,
    lexbfs,
    mcs,
    perfect_elimination_ordering,
    simplicial_vertices,
)
from .structures import CliqueTree, ReducedCliqueGraph

__all__ = [
    "CliqueTree", "DisconnectedGraphError", "Graph", "GraphError", "NotChordalError",
    "ParseError", "ReducedCliqueGraph", "build_clique_tree", "chain_reduction",
    "containment_elimination_scheme", "find_reversible_ordering", "generate_random_chordal",
    "is_bisimplicial", "is_chordal", "is_clique", "is_minimal_separator", "is_proper_interval",
    "is_reversible_ordering", "is_simplicial_elimination_scheme", "lexbfs", "maximal_cliques",
    "mcs", "minmax_simplicial_vertices", "parse_dimacs", "parse_edge_list", "parse_graph",
    "pending_minmax_tree", "perfect_elimination_ordering", "reduced_clique_graph",
    "search_counterexamples", "separates", "separator_multiset", "separator_poset",
    "simplicial_vertices", "verify_clique_tree",
]
