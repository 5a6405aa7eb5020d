"""Graph enumeration up to isomorphism and batch JIS classification."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable

from .graph import Graph, IsoClassIndex, empty_graph
from .graph_io import to_graph6
from .recognizer import Decision, SearchConfig, connected_bounds, decide_jis

MAX_CENSUS_ORDER = 7


def graphs_up_to_iso(max_order: int, connected: bool = False) -> dict[int, list[Graph]]:
    """All graphs of each order ``0..max_order``, one per isomorphism class.

    Order ``k`` comes from adding a vertex to order ``k - 1`` graphs.  For
    connected graphs it is enough to extend connected graphs with a
    non-empty neighborhood, since every connected graph has a non-cut vertex.
    """
    if max_order > MAX_CENSUS_ORDER:
        raise ValueError(f"internal generation is capped at order {MAX_CENSUS_ORDER}")
    levels: dict[int, list[Graph]] = {0: [empty_graph(0)] if not connected else []}
    if max_order >= 1:
        levels[1] = [empty_graph(1)]
    for k in range(2, max_order + 1):
        index = IsoClassIndex()
        for g in levels[k - 1]:
            for nbrs in range(1 if connected else 0, 1 << (k - 1)):
                rows = tuple(row | ((nbrs >> v & 1) << (k - 1)) for v, row in enumerate(g.rows)) + (nbrs,)
                index.add(Graph(k, rows))
        levels[k] = sorted(index.graphs, key=lambda h: (h.edge_count(), to_graph6(h)))
    return levels


@dataclass
class CensusRecord:
    index: int
    graph: Graph
    decision: Decision

    def to_json_dict(self) -> dict:
        return {"index": self.index, "graph6": to_graph6(self.graph), "order": self.graph.order, **self.decision.to_json_dict()}


@dataclass
class OrderSummary:
    order: int
    total: int = 0
    jis: int = 0
    not_jis: int = 0
    filter_rejected: int = 0
    inconclusive: int = 0
    max_m: int = 0
    max_ground: int = 0
    rules: dict[str, int] = field(default_factory=dict)

    @property
    def bound_m(self) -> int:
        return connected_bounds(self.order)[0]

    @property
    def bound_ground(self) -> int:
        return connected_bounds(self.order)[1]

    def to_json_dict(self) -> dict:
        return {
            "order": self.order,
            "total": self.total,
            "jis": self.jis,
            "not_jis": self.not_jis,
            "filter_rejected": self.filter_rejected,
            "inconclusive": self.inconclusive,
            "max_m": self.max_m,
            "max_ground": self.max_ground,
            "connected_bound_m": self.bound_m,
            "connected_bound_ground": self.bound_ground,
            "rules": dict(sorted(self.rules.items())),
        }


COLUMNS = [
    "order",
    "total",
    "jis",
    "not_jis",
    "filter_rejected",
    "inconclusive",
    "max_m",
    "connected_bound_m",
    "max_ground",
    "connected_bound_ground",
]


def _classify(args: tuple[Graph, SearchConfig]) -> Decision:
    g, cfg = args
    return decide_jis(g, cfg)


def classify(graphs: Iterable[Graph], cfg: SearchConfig | None = None, jobs: int = 1) -> list[CensusRecord]:
    """Decide every graph; results come back in input order whatever ``jobs`` is."""
    cfg = cfg or SearchConfig()
    items = list(graphs)
    if jobs > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            decisions = list(pool.map(_classify, [(g, cfg) for g in items], chunksize=8))
    else:
        decisions = [decide_jis(g, cfg) for g in items]
    return [CensusRecord(i, g, d) for i, (g, d) in enumerate(zip(items, decisions))]


def summarize(records: Iterable[CensusRecord]) -> list[OrderSummary]:
    rows: dict[int, OrderSummary] = {}
    for rec in records:
        s = rows.setdefault(rec.graph.order, OrderSummary(rec.graph.order))
        s.total += 1
        d = rec.decision
        if d.outcome == "jis":
            s.jis += 1
            fam = d.certificate.family  # type: ignore[union-attr]
            s.max_m = max(s.max_m, fam.m)
            s.max_ground = max(s.max_ground, fam.ground_size)
        elif d.outcome == "not_jis":
            s.not_jis += 1
            if d.reason == "filter":
                s.filter_rejected += 1
                rule = d.verdict.rule  # type: ignore[union-attr]
                s.rules[rule] = s.rules.get(rule, 0) + 1
        else:
            s.inconclusive += 1
    return [rows[k] for k in sorted(rows)]


def summary_table(summaries: list[OrderSummary], sep: str = "\t") -> str:
    lines = [sep.join(COLUMNS)]
    for s in summaries:
        d = s.to_json_dict()
        lines.append(sep.join(str(d[c]) for c in COLUMNS))
    return "\n".join(lines) + "\n"


def connected_census(max_order: int, cfg: SearchConfig | None = None, jobs: int = 1) -> list[CensusRecord]:
    levels = graphs_up_to_iso(max_order, connected=True)
    graphs = [g for k in sorted(levels) if k >= 1 for g in levels[k]]
    return classify(graphs, cfg, jobs)
