"""Edge-move distance between graphs and edge-move distance graphs.

An edge move deletes one edge and adds one new edge on the same vertex set.
Distances are taken up to isomorphism, so they are only defined between
graphs of equal order and equal size.
"""

from __future__ import annotations

from collections import deque
from itertools import combinations
from typing import Sequence

from .graph import Graph, IsoClassIndex, from_edge_list, invariant_signature, is_isomorphic, path_graph
from .realization import SetFamily

MAX_BFS_ORDER = 10


def single_edge_moves(g: Graph) -> list[Graph]:
    """Every labeled graph one move away from ``g`` (the no-op move excluded)."""
    out = []
    seen = set()
    for e in g.edges():
        for f in g.non_edges():
            h = g.with_edges(add=[f], remove=[e])
            if h.rows not in seen:
                seen.add(h.rows)
                out.append(h)
    return out


def _check_comparable(g: Graph, h: Graph) -> None:
    if g.order != h.order or g.edge_count() != h.edge_count():
        raise ValueError(
            f"edge move distance is undefined: orders {g.order}/{h.order}, sizes {g.edge_count()}/{h.edge_count()}"
        )


def edge_move_distance(g: Graph, h: Graph, max_order: int = MAX_BFS_ORDER) -> int:
    """Fewest edge moves turning ``g`` into a graph isomorphic to ``h``.

    Breadth-first search over isomorphism classes.
    """
    _check_comparable(g, h)
    if g.order > max_order:
        raise ValueError(f"order {g.order} exceeds the BFS limit {max_order}")
    target = invariant_signature(h)

    def hits(x: Graph) -> bool:
        return invariant_signature(x) == target and is_isomorphic(x, h) is not None

    if hits(g):
        return 0
    index = IsoClassIndex()
    index.add(g)
    frontier = deque([(g, 0)])
    while frontier:
        cur, d = frontier.popleft()
        for nxt in single_edge_moves(cur):
            _, new = index.add(nxt)
            if not new:
                continue
            if hits(nxt):
                return d + 1
            frontier.append((nxt, d + 1))
    raise AssertionError("graphs of equal order and size are always connected by moves")


def _edge_deleted_cards(g: Graph) -> dict[tuple, list[Graph]]:
    cards: dict[tuple, list[Graph]] = {}
    for e in g.edges():
        c = g.with_edges(remove=[e])
        cards.setdefault(invariant_signature(c), []).append(c)
    return cards


def one_move_apart(g: Graph, h: Graph) -> bool:
    """True iff some single edge move of ``g`` is isomorphic to ``h`` and ``g`` is not.

    Uses ``g - e ~= h - f`` for some edges ``e``, ``f``: re-adding the
    image of ``f`` is then a move from ``g`` to a copy of ``h``.
    """
    _check_comparable(g, h)
    if is_isomorphic(g, h) is not None:
        return False
    cards_h = _edge_deleted_cards(h)
    for sig, group in _edge_deleted_cards(g).items():
        for a in group:
            if any(is_isomorphic(a, b) is not None for b in cards_h.get(sig, ())):
                return True
    return False


def distance_graph(graphs: Sequence[Graph]) -> Graph:
    """Graph on the members, adjacent when their edge-move distance is 1."""
    for g in graphs[1:]:
        _check_comparable(graphs[0], g)
    sigs = [invariant_signature(g) for g in graphs]
    for i, j in combinations(range(len(graphs)), 2):
        if sigs[i] == sigs[j] and is_isomorphic(graphs[i], graphs[j]) is not None:
            raise ValueError(f"members {i} and {j} are isomorphic")
    edges = [(i, j) for i, j in combinations(range(len(graphs)), 2) if one_move_apart(graphs[i], graphs[j])]
    return from_edge_list(len(graphs), edges)


def jis_family_to_graphs(family: SetFamily) -> list[Graph]:
    """One graph per set: a path ``p_0..p_2k`` plus chords ``p_i p_(2k-i)`` for ``i`` in the set.

    ``k`` is one more than the largest element used, so chords never
    coincide with path edges.
    """
    k = 1 + max((max(s) for s in family.sets if s), default=0)
    spine = path_graph(2 * k + 1)
    out = []
    for s in family.sets:
        chords = [(i, 2 * k - i) for i in s]
        assert all(1 <= i <= k - 1 and 2 * k - i - i >= 2 for i in s)
        out.append(spine.with_edges(add=chords))
    return out


def q_family(n: int) -> list[Graph]:
    """The graphs ``Q_1..Q_n`` on ``n + 2`` vertices whose distance graph is ``K_n`` minus an edge.

    Vertex ``v_k`` is index ``k - 1``.
    """
    if n < 5:
        raise ValueError("q_family needs n >= 5")

    def v(k: int) -> int:
        return k - 1

    base = [(v(k), v(k + 1)) for k in range(1, n + 1)] + [(v(n - 1), v(n + 1))]
    members = [from_edge_list(n + 2, base + [(v(i), v(n + 2))]) for i in range(1, n)]
    last = members[0].with_edges(add=[(v(1), v(n - 2))], remove=[(v(n - 2), v(n - 1))])
    return members + [last]
