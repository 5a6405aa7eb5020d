"""Recognize induced subgraphs of Johnson graphs and certify the answer."""

from .filters import FilterVerdict, run_filters
from .graph import Graph, from_edge_list, gen_named, is_isomorphic, maximal_cliques
from .graph_io import parse_graph6, to_graph6
from .realization import Certificate, SetFamily, verify_realization
from .recognizer import Decision, SearchConfig, brute_force_oracle, decide_jis, jis_diameter

__all__ = [
    "Certificate",
    "Decision",
    "FilterVerdict",
    "Graph",
    "SearchConfig",
    "SetFamily",
    "brute_force_oracle",
    "decide_jis",
    "from_edge_list",
    "gen_named",
    "is_isomorphic",
    "jis_diameter",
    "maximal_cliques",
    "parse_graph6",
    "run_filters",
    "to_graph6",
    "verify_realization",
]
