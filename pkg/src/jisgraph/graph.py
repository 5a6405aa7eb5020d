"""Finite simple graphs stored as per-vertex adjacency bit rows."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph on vertices ``0..order-1``.

    ``rows[v]`` is an integer whose bit ``w`` is set iff ``v`` and ``w`` are
    adjacent.
    """

    order: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.order < 0:
            raise ValueError("order must be non-negative")
        if len(self.rows) != self.order:
            raise ValueError("need exactly one adjacency row per vertex")
        full = (1 << self.order) - 1
        for v, row in enumerate(self.rows):
            if row & ~full:
                raise ValueError(f"row {v} references a vertex >= order")
            if row >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
            for w in _bits(row):
                if not self.rows[w] >> v & 1:
                    raise ValueError(f"adjacency not symmetric at ({v}, {w})")

    def __repr__(self) -> str:
        return f"Graph(order={self.order}, edges={self.edges()})"

    def adjacent(self, v: int, w: int) -> bool:
        return bool(self.rows[v] >> w & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(_bits(self.rows[v]))

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.rows]

    def edges(self) -> list[tuple[int, int]]:
        return [(v, w) for v in range(self.order) for w in _bits(self.rows[v] >> (v + 1) << (v + 1))]

    def edge_count(self) -> int:
        return sum(self.degrees()) // 2

    def non_edges(self) -> list[tuple[int, int]]:
        return [(v, w) for v, w in combinations(range(self.order), 2) if not self.adjacent(v, w)]

    def induced_subgraph(self, vertices: Sequence[int]) -> Graph:
        """Subgraph induced on ``vertices``; vertex ``vertices[i]`` becomes ``i``."""
        index = {v: i for i, v in enumerate(vertices)}
        if len(index) != len(vertices):
            raise ValueError("repeated vertex in induced_subgraph")
        rows = []
        for v in vertices:
            row = 0
            for w in _bits(self.rows[v]):
                if w in index:
                    row |= 1 << index[w]
            rows.append(row)
        return Graph(len(vertices), tuple(rows))

    def delete_vertex(self, v: int) -> Graph:
        return self.induced_subgraph([w for w in range(self.order) if w != v])

    def with_edges(self, add: Iterable[tuple[int, int]] = (), remove: Iterable[tuple[int, int]] = ()) -> Graph:
        rows = list(self.rows)
        for v, w in remove:
            rows[v] &= ~(1 << w)
            rows[w] &= ~(1 << v)
        for v, w in add:
            if v == w:
                raise ValueError(f"self-loop ({v}, {w})")
            rows[v] |= 1 << w
            rows[w] |= 1 << v
        return Graph(self.order, tuple(rows))

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        return from_edge_list(self.order, [(perm[v], perm[w]) for v, w in self.edges()])

    def distances(self) -> list[list[int | None]]:
        """All-pairs shortest path lengths; ``None`` for unreachable pairs."""
        out: list[list[int | None]] = []
        for s in range(self.order):
            dist: list[int | None] = [None] * self.order
            dist[s] = 0
            queue = deque([s])
            while queue:
                v = queue.popleft()
                for w in _bits(self.rows[v]):
                    if dist[w] is None:
                        dist[w] = dist[v] + 1  # type: ignore[operator]
                        queue.append(w)
            out.append(dist)
        return out

    def is_connected(self) -> bool:
        return len(connected_components(self)) <= 1


def from_edge_list(order: int, edges: Iterable[tuple[int, int]]) -> Graph:
    rows = [0] * order
    for v, w in edges:
        if not (0 <= v < order and 0 <= w < order):
            raise ValueError(f"edge ({v}, {w}) has an endpoint outside 0..{order - 1}")
        if v == w:
            raise ValueError(f"self-loop ({v}, {w})")
        rows[v] |= 1 << w
        rows[w] |= 1 << v
    return Graph(order, tuple(rows))


def empty_graph(order: int = 0) -> Graph:
    return Graph(order, (0,) * order)


def connected_components(g: Graph) -> list[list[int]]:
    """Vertex blocks of the components, each sorted, ordered by least vertex."""
    seen = 0
    blocks = []
    for s in range(g.order):
        if seen >> s & 1:
            continue
        block = 1 << s
        frontier = block
        while frontier:
            nxt = 0
            for v in _bits(frontier):
                nxt |= g.rows[v]
            frontier = nxt & ~block
            block |= frontier
        seen |= block
        blocks.append(list(_bits(block)))
    return blocks


def two_core(g: Graph) -> tuple[Graph, list[int], list[tuple[int, int | None]]]:
    """Strip vertices of degree < 2 until none remain.

    Returns the core (induced on the surviving vertices, in index order), the
    surviving original vertex indices, and the removal sequence as pairs
    ``(removed, neighbor_at_removal_or_None)`` in original indices.
    """
    alive = (1 << g.order) - 1
    removal: list[tuple[int, int | None]] = []
    while True:
        low = [v for v in _bits(alive) if (g.rows[v] & alive).bit_count() < 2]
        if not low:
            break
        v = low[0]
        nbr = g.rows[v] & alive
        removal.append((v, nbr.bit_length() - 1 if nbr else None))
        alive &= ~(1 << v)
    survivors = list(_bits(alive))
    return g.induced_subgraph(survivors), survivors, removal


def disjoint_union(g: Graph, h: Graph) -> Graph:
    shift = g.order
    return Graph(g.order + h.order, g.rows + tuple(row << shift for row in h.rows))


def cartesian_product(g: Graph, h: Graph) -> Graph:
    """Vertex ``(x, y)`` has index ``x * h.order + y``."""
    edges = []
    for x in range(g.order):
        for y, z in h.edges():
            edges.append((x * h.order + y, x * h.order + z))
    for x, z in g.edges():
        for y in range(h.order):
            edges.append((x * h.order + y, z * h.order + y))
    return from_edge_list(g.order * h.order, edges)


def complement(g: Graph) -> Graph:
    full = (1 << g.order) - 1
    return Graph(g.order, tuple(full & ~row & ~(1 << v) for v, row in enumerate(g.rows)))


def maximal_cliques(g: Graph) -> list[tuple[int, ...]]:
    """All maximal cliques, as sorted tuples in lexicographic order.

    Bron-Kerbosch with Tomita pivoting on bit rows.  The empty graph has no
    maximal cliques; an isolated vertex is a maximal 1-clique.
    """
    found: list[tuple[int, ...]] = []
    rows = g.rows

    def expand(r: int, p: int, x: int) -> None:
        if not p and not x:
            found.append(tuple(_bits(r)))
            return
        pivot = max(_bits(p | x), key=lambda u: (p & rows[u]).bit_count())
        for v in _bits(p & ~rows[pivot]):
            bit = 1 << v
            expand(r | bit, p & rows[v], x & rows[v])
            p &= ~bit
            x |= bit

    if g.order:
        expand(0, (1 << g.order) - 1, 0)
    found.sort()
    return found


# -- isomorphism -----------------------------------------------------------


def _refined_colors(g: Graph, rounds: int | None = None) -> list[int]:
    # Color refinement; colors are structural hashes so they are comparable
    # across graphs.
    colors = [row.bit_count() for row in g.rows]
    for _ in range(rounds if rounds is not None else g.order):
        new = [hash((colors[v], tuple(sorted(colors[w] for w in _bits(g.rows[v]))))) for v in range(g.order)]
        if len(set(new)) == len(set(colors)):
            colors = new
            break
        colors = new
    return colors


def invariant_signature(g: Graph) -> tuple:
    """Isomorphism-invariant fingerprint: order, size, triangles, refined color histogram."""
    triangles = sum((g.rows[v] & g.rows[w]).bit_count() for v, w in g.edges()) // 3
    return (g.order, g.edge_count(), triangles, tuple(sorted(_refined_colors(g))))


def is_isomorphic(g: Graph, h: Graph) -> list[int] | None:
    """Return ``phi`` with ``g.adjacent(v, w) == h.adjacent(phi[v], phi[w])``, or ``None``."""
    if g.order != h.order or g.edge_count() != h.edge_count():
        return None
    if sorted(g.degrees()) != sorted(h.degrees()):
        return None
    cg, ch = _refined_colors(g), _refined_colors(h)
    if sorted(cg) != sorted(ch):
        return None
    n = g.order
    by_color: dict[int, list[int]] = {}
    for v in range(n):
        by_color.setdefault(ch[v], []).append(v)

    # Rarest color first, then keep the search frontier attached to mapped vertices.
    order: list[int] = []
    placed = 0
    remaining = set(range(n))
    while remaining:
        attached = [v for v in remaining if g.rows[v] & placed]
        pool = attached or list(remaining)
        v = min(pool, key=lambda u: (len(by_color[cg[u]]), -(g.rows[u] & placed).bit_count(), u))
        order.append(v)
        placed |= 1 << v
        remaining.discard(v)

    phi = [-1] * n
    used = 0

    def extend(i: int) -> bool:
        nonlocal used
        if i == n:
            return True
        v = order[i]
        for w in by_color[cg[v]]:
            if used >> w & 1:
                continue
            ok = True
            for u in order[:i]:
                if g.adjacent(u, v) != h.adjacent(phi[u], w):
                    ok = False
                    break
            if not ok:
                continue
            phi[v] = w
            used |= 1 << w
            if extend(i + 1):
                return True
            used &= ~(1 << w)
            phi[v] = -1
        return False

    return list(phi) if extend(0) else None


class IsoClassIndex:
    """Bucketed store of pairwise non-isomorphic graphs."""

    def __init__(self) -> None:
        self._buckets: dict[tuple, list[int]] = {}
        self.graphs: list[Graph] = []

    def __len__(self) -> int:
        return len(self.graphs)

    def find(self, g: Graph, signature: tuple | None = None) -> int | None:
        sig = signature if signature is not None else invariant_signature(g)
        for i in self._buckets.get(sig, ()):
            if is_isomorphic(g, self.graphs[i]) is not None:
                return i
        return None

    def add(self, g: Graph) -> tuple[int, bool]:
        """Insert ``g`` unless an isomorphic copy exists; return (index, inserted)."""
        sig = invariant_signature(g)
        hit = self.find(g, sig)
        if hit is not None:
            return hit, False
        self.graphs.append(g)
        self._buckets.setdefault(sig, []).append(len(self.graphs) - 1)
        return len(self.graphs) - 1, True


# -- named families --------------------------------------------------------

FAMILY_MINIMUM = {
    "complete": 0,
    "empty": 0,
    "cycle": 3,
    "path": 1,
    "star": 1,
    "theta": 4,
    "delta": 1,
}


def complete_graph(k: int) -> Graph:
    return from_edge_list(k, combinations(range(k), 2))


def cycle_graph(k: int) -> Graph:
    return from_edge_list(k, [(i, (i + 1) % k) for i in range(k)])


def path_graph(k: int) -> Graph:
    return from_edge_list(k, [(i, i + 1) for i in range(k - 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    return from_edge_list(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def theta_graph(k: int) -> Graph:
    """Two k-cycles sharing k-1 vertices.

    Shared path ``w_1..w_{k-1}`` is ``0..k-2``; the two extra vertices
    ``k-1`` and ``k`` are each joined to both path ends.
    """
    edges = [(i, i + 1) for i in range(k - 2)]
    for extra in (k - 1, k):
        edges += [(0, extra), (k - 2, extra)]
    return from_edge_list(k + 1, edges)


def delta_graph(i: int) -> Graph:
    """Chain of ``i`` consecutive triangles plus an apex.

    Chain vertices ``0..i+1`` with edges ``j~j+1`` and ``j~j+2``; the apex
    ``i+2`` is joined to the two chain ends.
    """
    k = i + 2
    edges = [(j, j + 1) for j in range(k - 1)] + [(j, j + 2) for j in range(k - 2)]
    edges += [(0, k), (k - 1, k)]
    return from_edge_list(k + 1, edges)


def gen_named(family: str, *params: int) -> Graph:
    if family == "bipartite":
        if len(params) != 2 or min(params) < 0:
            raise ValueError("bipartite needs two non-negative part sizes")
        return complete_bipartite(*params)
    if family not in FAMILY_MINIMUM:
        raise ValueError(f"unknown family {family!r}")
    if len(params) != 1:
        raise ValueError(f"{family} takes exactly one parameter")
    (k,) = params
    if k < FAMILY_MINIMUM[family]:
        raise ValueError(f"{family} needs parameter >= {FAMILY_MINIMUM[family]}, got {k}")
    return {
        "complete": complete_graph,
        "empty": empty_graph,
        "cycle": cycle_graph,
        "path": path_graph,
        "star": lambda n: complete_bipartite(1, n),
        "theta": theta_graph,
        "delta": delta_graph,
    }[family](k)
