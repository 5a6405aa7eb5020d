"""Exact JIS recognition by bounded backtracking over set families.

A connected graph of order ``n >= 2`` that is JIS has a realization by
``m``-sets with ``m <= n - 1`` whose union has at most ``2n - 2`` elements:
strip the common intersection, and walk the vertices in an order where each
one has an earlier neighbor.  The search enumerates exactly these normal
forms.  Disconnected graphs are assembled from their components.
"""

from __future__ import annotations

import time
from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable

from .filters import FilterVerdict, run_filters
from .graph import Graph, connected_components
from .realization import Certificate, SetFamily, combine_components, f_distance, verify_realization

Visitor = Callable[[list[int]], bool]

EXHAUSTED = "exhausted"
STOPPED = "stopped"
BUDGET = "budget"


@dataclass(frozen=True)
class SearchConfig:
    max_m: int | None = None
    ground_bound: int | None = None
    node_limit: int | None = None
    deterministic_certificate: bool = True

    def __post_init__(self) -> None:
        for name in ("max_m", "ground_bound", "node_limit"):
            value = getattr(self, name)
            if value is not None and value <= 0:
                raise ValueError(f"{name} must be positive")


@dataclass
class SearchStats:
    nodes: int = 0
    max_depth: int = 0
    per_m: list[dict] = field(default_factory=list)
    wall_time: float = 0.0

    def to_json_dict(self, timing: bool = False) -> dict:
        out = {"nodes": self.nodes, "max_depth": self.max_depth, "per_m": self.per_m}
        if timing:
            out["wall_time_s"] = round(self.wall_time, 6)
        return out


@dataclass
class Decision:
    outcome: str  # "jis", "not_jis" or "inconclusive"
    certificate: Certificate | None = None
    reason: str | None = None  # "filter" or "search_exhausted" when not_jis
    verdict: FilterVerdict | None = None
    stats: SearchStats = field(default_factory=SearchStats)

    @property
    def is_jis(self) -> bool:
        return self.outcome == "jis"

    def to_json_dict(self, timing: bool = False) -> dict:
        out: dict = {"outcome": self.outcome}
        if self.reason is not None:
            out["reason"] = self.reason
        if self.verdict is not None:
            out["verdict"] = self.verdict.to_json_dict()
        if self.certificate is not None:
            out["certificate"] = self.certificate.to_json_dict()
        out["stats"] = self.stats.to_json_dict(timing)
        return out


def connected_bounds(n: int) -> tuple[int, int]:
    """Largest set size and ground size needed for a connected graph of order ``n``."""
    if n <= 1:
        return 1, 1
    return n - 1, 2 * n - 2


def bfs_order(g: Graph) -> tuple[list[int], list[int]]:
    """BFS from vertex 0 with index tie-breaks; returns (order, parent)."""
    parent = [-1] * g.order
    order = [0]
    seen = {0}
    queue = deque([0])
    while queue:
        v = queue.popleft()
        for w in g.neighbors(v):
            if w not in seen:
                seen.add(w)
                parent[w] = v
                order.append(w)
                queue.append(w)
    if len(order) != g.order:
        raise ValueError("search_connected needs a connected graph")
    return order, parent


class _Budget(Exception):
    pass


class _Stop(Exception):
    pass


def search_connected(
    g: Graph,
    m: int,
    ground: int,
    visitor: Visitor,
    node_limit: int | None = None,
    stats: SearchStats | None = None,
) -> str:
    """Enumerate realizations of connected ``g`` by ``m``-subsets of ``1..ground``.

    Sets are bitmasks (bit ``e - 1`` for element ``e``) passed to ``visitor``
    in vertex index order; the visitor returns True to stop.  The first BFS
    vertex gets ``{1..m}``.  Every later vertex is its BFS parent's set with
    one element swapped out, and only one representative is tried among
    elements that lie in exactly the same assigned sets (this covers fresh
    elements, which enter in ascending order).  Partial assignments are cut
    on a wrong intersection size, a repeated set, or when two sets differ by
    more than the graph distance between their vertices.

    Returns ``"exhausted"``, ``"stopped"`` or ``"budget"``.
    """
    if g.order == 0 or m < 1 or ground < m:
        return EXHAUSTED
    stats = stats if stats is not None else SearchStats()
    order, parent = bfs_order(g)
    n = g.order
    dist = g.distances()
    pos = {v: i for i, v in enumerate(order)}
    target = m - 1
    # For each depth i: earlier depths j with (adjacent?, max allowed difference).
    checks = []
    for i, v in enumerate(order):
        checks.append([(j, g.adjacent(v, order[j]), dist[v][order[j]]) for j in range(i)])
    parent_depth = [pos[parent[v]] if i else -1 for i, v in enumerate(order)]

    assigned = [0] * n
    # membership[e] = bitmask over depths whose set contains element e+1
    membership = [0] * ground
    first = (1 << m) - 1
    assigned[0] = first
    for e in range(m):
        membership[e] = 1
    used = m  # elements 1..used have appeared
    limit = node_limit

    def candidates(i: int) -> list[int]:
        base = assigned[parent_depth[i]]
        out_reps: dict[int, int] = {}
        in_reps: dict[int, int] = {}
        for e in range(used):
            sig = membership[e]
            if base >> e & 1:
                out_reps.setdefault(sig, e)
            else:
                in_reps.setdefault(sig, e)
        adds = sorted(in_reps.values())
        if used < ground:
            adds.append(used)
        drops = sorted(out_reps.values())
        return [base & ~(1 << x) | (1 << y) for x in drops for y in adds]

    def place(i: int) -> None:
        nonlocal used
        if i == n:
            sol = [0] * n
            for d, v in enumerate(order):
                sol[v] = assigned[d]
            if visitor(sol):
                raise _Stop
            return
        for s in candidates(i):
            stats.nodes += 1
            if limit is not None and stats.nodes > limit:
                raise _Budget
            ok = True
            for j, adj, bound in checks[i]:
                inter = (s & assigned[j]).bit_count()
                if adj:
                    if inter != target:
                        ok = False
                        break
                elif inter == target or inter == m or m - inter > bound:
                    ok = False
                    break
            if not ok:
                continue
            assigned[i] = s
            bit = 1 << i
            fresh = s >> used
            grew = 0
            if fresh:
                grew = 1
                used += 1
            x = s
            while x:
                low = x & -x
                membership[low.bit_length() - 1] |= bit
                x ^= low
            if i + 1 > stats.max_depth:
                stats.max_depth = i + 1
            place(i + 1)
            x = s
            while x:
                low = x & -x
                membership[low.bit_length() - 1] &= ~bit
                x ^= low
            used -= grew
        assigned[i] = 0

    try:
        place(1)
    except _Stop:
        return STOPPED
    except _Budget:
        return BUDGET
    return EXHAUSTED


def _decide_component(g: Graph, cfg: SearchConfig, stats: SearchStats, index: int) -> tuple[str, SetFamily | None]:
    top_m, top_ground = connected_bounds(g.order)
    if cfg.max_m is not None:
        top_m = min(top_m, cfg.max_m)
    if cfg.ground_bound is not None:
        top_ground = min(top_ground, cfg.ground_bound)
    for m in range(1, top_m + 1):
        found: list[list[int]] = []

        def keep(sol: list[int]) -> bool:
            found.append(sol)
            return True

        remaining = None if cfg.node_limit is None else cfg.node_limit - stats.nodes
        if remaining is not None and remaining <= 0:
            stats.per_m.append({"component": index, "m": m, "result": BUDGET})
            return BUDGET, None
        local = SearchStats()
        result = search_connected(g, m, top_ground, keep, remaining, local)
        stats.nodes += local.nodes
        stats.max_depth = max(stats.max_depth, local.max_depth)
        if result == STOPPED:
            stats.per_m.append({"component": index, "m": m, "result": "found"})
            return "found", SetFamily.from_masks(m, found[0])
        stats.per_m.append({"component": index, "m": m, "result": result})
        if result == BUDGET:
            return BUDGET, None
    return EXHAUSTED, None


def decide_jis(g: Graph, cfg: SearchConfig | None = None) -> Decision:
    """Decide whether ``g`` is JIS, with a verified certificate when it is."""
    cfg = cfg or SearchConfig()
    start = time.perf_counter()
    stats = SearchStats()

    def done(decision: Decision) -> Decision:
        stats.wall_time = time.perf_counter() - start
        decision.stats = stats
        return decision

    if g.order == 0:
        return done(Decision("jis", Certificate.issue(g, SetFamily(0, 0, ()))))
    verdict = run_filters(g)
    if not verdict.passed:
        return done(Decision("not_jis", reason="filter", verdict=verdict))

    blocks = connected_components(g)
    parts = []
    inconclusive = False
    for index, block in enumerate(blocks):
        comp = g.induced_subgraph(block)
        result, family = _decide_component(comp, cfg, stats, index)
        if result == EXHAUSTED:
            return done(Decision("not_jis", reason="search_exhausted"))
        if result == BUDGET:
            inconclusive = True
            continue
        parts.append((comp, family))
    if inconclusive:
        return done(Decision("inconclusive", reason="budget"))

    if len(parts) == 1:
        combined = parts[0][1]
    else:
        combined = combine_components(parts)  # type: ignore[arg-type]
    sets: list[tuple[int, ...]] = [()] * g.order
    flat = [v for block in blocks for v in block]
    for i, v in enumerate(flat):
        sets[v] = combined.sets[i]  # type: ignore[union-attr]
    family = SetFamily(combined.m, combined.ground_size, tuple(sets))  # type: ignore[union-attr]
    return done(Decision("jis", Certificate.issue(g, family)))


def brute_force_oracle(g: Graph) -> Decision:
    """Exhaustive search over ``m``-subsets of ``1..2n`` for every ``m <= n``.

    Shares nothing with :func:`search_connected` beyond the bit tricks.
    Vertices are filled in index order.  Vertex 0 gets ``{1..m}`` (any
    family can be relabeled that way); a vertex with an earlier neighbor
    draws from the Johnson-graph neighbors of that neighbor's set, any other
    vertex from all ``m``-subsets.  A partial family is abandoned only when
    an already filled pair is wrong.  Limited to order 5.
    """
    n = g.order
    if n > 5:
        raise ValueError("brute_force_oracle is limited to graphs of order <= 5")
    start = time.perf_counter()
    stats = SearchStats()
    if n == 0:
        return Decision("jis", Certificate.issue(g, SetFamily(0, 0, ())), stats=stats)
    ground = 2 * n
    for m in range(1, n + 1):
        pool = [sum(1 << (e - 1) for e in c) for c in combinations(range(1, ground + 1), m)]
        johnson = {s: [t for t in pool if (s & t).bit_count() == m - 1] for s in pool}
        earlier = [next((j for j in range(i) if g.adjacent(i, j)), None) for i in range(n)]
        chosen: list[int] = [(1 << m) - 1]

        def fill(i: int) -> bool:
            if i == n:
                return True
            j0 = earlier[i]
            for s in pool if j0 is None else johnson[chosen[j0]]:
                stats.nodes += 1
                if all(
                    s != chosen[j] and (g.adjacent(i, j) == ((s & chosen[j]).bit_count() == m - 1)) for j in range(i)
                ):
                    chosen.append(s)
                    if fill(i + 1):
                        return True
                    chosen.pop()
            return False

        if fill(1):
            stats.per_m.append({"component": 0, "m": m, "result": "found"})
            stats.wall_time = time.perf_counter() - start
            family = SetFamily.from_masks(m, chosen, ground)
            return Decision("jis", Certificate.issue(g, family), stats=stats)
        stats.per_m.append({"component": 0, "m": m, "result": EXHAUSTED})
    stats.wall_time = time.perf_counter() - start
    return Decision("not_jis", reason="search_exhausted", stats=stats)


@dataclass
class DiameterResult:
    diameter: int
    pair: tuple[int, int] | None
    minima: dict[tuple[int, int], int]
    families: dict[tuple[int, int], SetFamily]
    realizations_seen: int

    def to_json_dict(self) -> dict:
        return {
            "diameter": self.diameter,
            "pair": list(self.pair) if self.pair else None,
            "realizations_seen": self.realizations_seen,
            "pairs": [
                {"pair": [v, w], "min_distance": d, "family": self.families[(v, w)].to_json_dict()}
                for (v, w), d in sorted(self.minima.items())
            ],
        }


def jis_diameter(g: Graph, node_limit: int | None = None) -> DiameterResult:
    """Max over vertex pairs of the least F-distance over all realizations.

    Every realization reduces to a normal form with the same pairwise set
    differences, so enumerating normal forms for every ``m`` is enough.
    """
    if g.order == 0 or not g.is_connected():
        raise ValueError("jis_diameter needs a non-empty connected graph")
    decision = decide_jis(g, SearchConfig(node_limit=node_limit))
    if decision.outcome == "inconclusive":
        raise RuntimeError("search budget exhausted before JIS was established")
    if not decision.is_jis:
        raise ValueError("graph is not JIS")
    n = g.order
    pairs = list(combinations(range(n), 2))
    minima: dict[tuple[int, int], int] = {}
    best: dict[tuple[int, int], tuple[int, list[int]]] = {}
    seen = 0
    top_m, top_ground = connected_bounds(n)
    stats = SearchStats()

    for m in range(1, top_m + 1):

        def record(sol: list[int], m: int = m) -> bool:
            nonlocal seen
            seen += 1
            for v, w in pairs:
                d = m - (sol[v] & sol[w]).bit_count()
                if (v, w) not in minima or d < minima[(v, w)]:
                    minima[(v, w)] = d
                    best[(v, w)] = (m, list(sol))
            return False

        remaining = None if node_limit is None else node_limit - stats.nodes
        if search_connected(g, m, top_ground, record, remaining, stats) == BUDGET:
            raise RuntimeError("search budget exhausted while enumerating realizations")

    families = {p: SetFamily.from_masks(m, sol) for p, (m, sol) in best.items()}
    for p, fam in families.items():
        assert verify_realization(g, fam).ok and f_distance(fam, *p) == minima[p]
    if not pairs:
        return DiameterResult(0, None, {}, {}, seen)
    pair = max(pairs, key=lambda p: (minima[p], -p[0], -p[1]))
    return DiameterResult(minima[pair], pair, minima, families, seen)


def enumerate_realizations(g: Graph, m: int, ground: int | None = None) -> list[SetFamily]:
    """All normal-form realizations at set size ``m`` (up to the search's symmetry reduction)."""
    out: list[SetFamily] = []
    top_ground = ground if ground is not None else connected_bounds(g.order)[1]

    def keep(sol: list[int]) -> bool:
        out.append(SetFamily.from_masks(m, sol))
        return False

    search_connected(g, m, top_ground, keep)
    return out


__all__ = [
    "SearchConfig",
    "SearchStats",
    "Decision",
    "DiameterResult",
    "bfs_order",
    "brute_force_oracle",
    "connected_bounds",
    "decide_jis",
    "enumerate_realizations",
    "jis_diameter",
    "search_connected",
]
