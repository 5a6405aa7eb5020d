import random
from itertools import permutations

import pytest
from hypothesis import given, settings

from jisgraph.graph import (
    Graph,
    IsoClassIndex,
    cartesian_product,
    complete_bipartite,
    complete_graph,
    connected_components,
    cycle_graph,
    delta_graph,
    disjoint_union,
    empty_graph,
    from_edge_list,
    gen_named,
    is_isomorphic,
    maximal_cliques,
    path_graph,
    theta_graph,
    two_core,
)

from conftest import brute_maximal_cliques, graphs


def test_from_edge_list_triangle():
    g = from_edge_list(3, [(0, 1), (1, 2), (2, 0)])
    assert g.edges() == [(0, 1), (0, 2), (1, 2)]
    assert g == complete_graph(3)


def test_from_edge_list_collapses_duplicates():
    g = from_edge_list(2, [(0, 1), (1, 0), (0, 1)])
    assert g.edge_count() == 1


def test_single_vertex():
    g = from_edge_list(1, [])
    assert g.order == 1 and g.edge_count() == 0


def test_k23_fixture(k23_edges):
    assert k23_edges.degrees() == [3, 3, 2, 2, 2]
    assert k23_edges == complete_bipartite(2, 3)


@pytest.mark.parametrize("edges", [[(0, 3)], [(-1, 0)], [(1, 1)]])
def test_from_edge_list_rejects(edges):
    with pytest.raises(ValueError):
        from_edge_list(3, edges)


def test_graph_rejects_asymmetric_rows():
    with pytest.raises(ValueError, match="symmetric"):
        Graph(2, (0b10, 0))


def test_components():
    assert connected_components(complete_graph(3)) == [[0, 1, 2]]
    assert connected_components(from_edge_list(4, [(0, 2), (1, 3)])) == [[0, 2], [1, 3]]
    assert connected_components(empty_graph(0)) == []


def test_two_core_of_tree_is_empty():
    core, survivors, removal = two_core(path_graph(5))
    assert core.order == 0 and survivors == []
    assert sorted(v for v, _ in removal) == list(range(5))
    assert removal[-1][1] is None


def test_two_core_cycle_and_delta():
    core, survivors, removal = two_core(cycle_graph(6))
    assert core == cycle_graph(6) and removal == []
    core, _, removal = two_core(delta_graph(2))
    assert core == delta_graph(2) and removal == []


def test_two_core_records_surviving_neighbor():
    g = cycle_graph(3).with_edges()  # triangle
    g = from_edge_list(5, g.edges() + [(0, 3), (3, 4)])
    core, survivors, removal = two_core(g)
    assert survivors == [0, 1, 2]
    assert removal == [(4, 3), (3, 0)]


@settings(max_examples=60, deadline=None)
@given(graphs())
def test_two_core_fixed_point(g):
    core, _, _ = two_core(g)
    assert two_core(core)[0] == core
    assert core.order == 0 or min(core.degrees()) >= 2


def test_cartesian_product_examples():
    assert is_isomorphic(cartesian_product(complete_graph(2), complete_graph(2)), cycle_graph(4)) is not None
    g = delta_graph(3)
    assert cartesian_product(g, complete_graph(1)) == g
    c33 = cartesian_product(cycle_graph(3), cycle_graph(3))
    assert (c33.order, c33.edge_count(), set(c33.degrees())) == (9, 18, {4})


@settings(max_examples=40, deadline=None)
@given(graphs(max_order=5), graphs(max_order=5))
def test_cartesian_product_degrees(g, h):
    p = cartesian_product(g, h)
    assert p.order == g.order * h.order
    for x in range(g.order):
        for y in range(h.order):
            assert p.degree(x * h.order + y) == g.degree(x) + h.degree(y)


def test_disjoint_union():
    assert disjoint_union(complete_graph(1), complete_graph(1)) == empty_graph(2)
    u = disjoint_union(complete_graph(3), cycle_graph(4))
    assert (u.order, u.edge_count(), len(connected_components(u))) == (7, 7, 2)
    assert disjoint_union(cycle_graph(5), empty_graph(0)) == cycle_graph(5)


def test_maximal_cliques_k5_minus_edge():
    cliques = maximal_cliques(complete_graph(5).with_edges(remove=[(3, 4)]))
    assert cliques == [(0, 1, 2, 3), (0, 1, 2, 4)]
    assert len(set(cliques[0]) & set(cliques[1])) == 3


def test_maximal_cliques_c5_and_delta2():
    assert maximal_cliques(cycle_graph(5)) == sorted(tuple(sorted(e)) for e in cycle_graph(5).edges())
    # Labels v1..v5 are 0..4.
    assert maximal_cliques(delta_graph(2)) == [(0, 1, 2), (0, 4), (1, 2, 3), (3, 4)]


@settings(max_examples=150, deadline=None)
@given(graphs())
def test_maximal_cliques_match_subset_scan(g):
    assert maximal_cliques(g) == brute_maximal_cliques(g)


def test_isomorphism_examples():
    assert is_isomorphic(cycle_graph(6), complete_bipartite(3, 3)) is None
    p4 = path_graph(4)
    relabeled = p4.relabel([2, 0, 3, 1])
    phi = is_isomorphic(p4, relabeled)
    assert phi is not None
    assert all(p4.adjacent(v, w) == relabeled.adjacent(phi[v], phi[w]) for v in range(4) for w in range(4))
    assert is_isomorphic(theta_graph(4), complete_bipartite(2, 3)) is not None


def _brute_iso(g, h):
    if g.order != h.order:
        return False
    return any(g.relabel(p) == h for p in permutations(range(g.order)))


@settings(max_examples=80, deadline=None)
@given(graphs(max_order=6), graphs(max_order=6))
def test_isomorphism_matches_permutation_scan(g, h):
    assert (is_isomorphic(g, h) is not None) == _brute_iso(g, h)


@settings(max_examples=60, deadline=None)
@given(graphs(max_order=9))
def test_isomorphism_reflexive_and_symmetric_under_relabeling(g):
    perm = list(range(g.order))
    random.Random(g.order * 1000 + g.edge_count()).shuffle(perm)
    h = g.relabel(perm)
    assert is_isomorphic(g, g) is not None
    assert is_isomorphic(g, h) is not None and is_isomorphic(h, g) is not None


def test_isomorphism_exact_on_regular_graphs():
    # Same degree sequence, refinement cannot split them.
    two_triangles = disjoint_union(complete_graph(3), complete_graph(3))
    assert is_isomorphic(cycle_graph(6), two_triangles) is None
    prism = cartesian_product(complete_graph(3), complete_graph(2))
    assert is_isomorphic(prism, complete_bipartite(3, 3)) is None


def test_iso_class_index():
    index = IsoClassIndex()
    assert index.add(path_graph(4)) == (0, True)
    assert index.add(path_graph(4).relabel([3, 1, 0, 2])) == (0, False)
    assert index.add(complete_bipartite(1, 3)) == (1, True)


def test_gen_named_delta2():
    g = gen_named("delta", 2)
    assert g.order == 5 and g.edge_count() == 7
    assert is_isomorphic(g, complete_bipartite(2, 3).with_edges(add=[(2, 3)])) is not None


def test_gen_named_theta4_and_k1():
    assert is_isomorphic(gen_named("theta", 4), complete_bipartite(2, 3)) is not None
    assert gen_named("complete", 1) == empty_graph(1)


@pytest.mark.parametrize("family,k", [("cycle", 2), ("theta", 3), ("delta", 0), ("nope", 3)])
def test_gen_named_rejects(family, k):
    with pytest.raises(ValueError):
        gen_named(family, k)


@pytest.mark.parametrize("i", range(1, 8))
def test_delta_shape(i):
    g = delta_graph(i)
    assert g.order == i + 3
    assert g.edge_count() == 2 * (i + 2) - 3 + 2
    # For i = 1 the apex closes a second triangle with the chain ends.
    assert sum(1 for c in maximal_cliques(g) if len(c) == 3) == i + (i == 1)


@pytest.mark.parametrize("k", range(4, 10))
def test_theta_shape(k):
    g = theta_graph(k)
    assert g.order == k + 1 and g.edge_count() == k + 2
    assert sorted(g.degrees()) == [2] * (k - 1) + [3, 3]
