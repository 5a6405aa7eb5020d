from __future__ import annotations

from itertools import combinations

import pytest
from hypothesis import strategies as st

from jisgraph.graph import Graph, complete_bipartite, complete_graph, delta_graph, from_edge_list


def k23_plus_hub_edge() -> Graph:
    """K_{2,3} plus the edge joining its two degree-3 vertices."""
    return complete_bipartite(2, 3).with_edges(add=[(0, 1)])


def k5_minus_edge() -> Graph:
    return complete_graph(5).with_edges(remove=[(3, 4)])


def delta4_minus_apex() -> Graph:
    return delta_graph(4).delete_vertex(6)


DELTA4_MINUS_APEX_SETS = [{1, 2, 3, 4}, {1, 2, 3, 5}, {1, 2, 3, 6}, {2, 3, 5, 6}, {2, 3, 6, 7}, {3, 5, 6, 7}]


@st.composite
def graphs(draw, min_order: int = 0, max_order: int = 8) -> Graph:
    n = draw(st.integers(min_order, max_order))
    pairs = list(combinations(range(n), 2))
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return from_edge_list(n, [p for p, keep in zip(pairs, mask) if keep])


def brute_maximal_cliques(g: Graph) -> list[tuple[int, ...]]:
    cliques = [
        c
        for k in range(1, g.order + 1)
        for c in combinations(range(g.order), k)
        if all(g.adjacent(a, b) for a, b in combinations(c, 2))
    ]
    as_sets = [set(c) for c in cliques]
    return sorted(c for c, s in zip(cliques, as_sets) if not any(s < t for t in as_sets))


@pytest.fixture
def k23_edges() -> Graph:
    return from_edge_list(5, [(i, j) for i in (0, 1) for j in (2, 3, 4)])
