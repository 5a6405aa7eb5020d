"""Acceptance suite: one PASS/FAIL line per criterion.

Run with ``pytest tests/test_acceptance.py -s`` or ``python tests/test_acceptance.py``.
Each criterion gathers all of its sub-checks before failing, so the printed
line lists every failing item rather than the first.
"""

from __future__ import annotations

import random
import sys
import time
from itertools import combinations
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent))

from conftest import k23_plus_hub_edge, k5_minus_edge  # noqa: E402
from jisgraph.census import graphs_up_to_iso  # noqa: E402
from jisgraph.edgemove import distance_graph, edge_move_distance, jis_family_to_graphs, q_family  # noqa: E402
from jisgraph.filters import recheck_witness, run_filters  # noqa: E402
from jisgraph.graph import (  # noqa: E402
    cartesian_product,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    delta_graph,
    disjoint_union,
    from_edge_list,
    is_isomorphic,
    path_graph,
    theta_graph,
)
from jisgraph.realization import (  # noqa: E402
    SetFamily,
    combine_components,
    product_realization,
    realize_by_core,
    realize_complete,
    realize_cycle,
    verify_realization,
)
from jisgraph.recognizer import SearchConfig, brute_force_oracle, connected_bounds, decide_jis, jis_diameter  # noqa: E402

DEFAULT_LIMIT_S = 60.0
DELTA6_LIMIT_S = 3600.0
ORACLE_LIMIT_S = 300.0
DELTA7_BUDGET = 20_000_000


class Checks:
    def __init__(self) -> None:
        self.failures: list[str] = []
        self.notes: list[str] = []

    def expect(self, ok: bool, label: str) -> None:
        if not ok:
            self.failures.append(label)

    def note(self, text: str) -> None:
        self.notes.append(text)


def _report(number: int, title: str, checks: Checks) -> str:
    status = "PASS" if not checks.failures else "FAIL"
    line = f"[{status}] criterion {number}: {title}"
    if checks.notes:
        line += " | " + "; ".join(checks.notes)
    if checks.failures:
        line += " | failing: " + "; ".join(checks.failures)
    return line


def _timed_decide(g, limit: float):
    start = time.perf_counter()
    d = decide_jis(g)
    return d, time.perf_counter() - start <= limit


def criterion_1(c: Checks) -> None:
    cases = [
        ("K_{2,3}", complete_bipartite(2, 3), "not_jis", None, DEFAULT_LIMIT_S),
        ("K_5 - e", k5_minus_edge(), "not_jis", "maxclique-overlap", DEFAULT_LIMIT_S),
        ("Delta_2", delta_graph(2), "not_jis", None, DEFAULT_LIMIT_S),
        ("Delta_4", delta_graph(4), "not_jis", None, DEFAULT_LIMIT_S),
        ("Delta_3", delta_graph(3), "jis", None, DEFAULT_LIMIT_S),
        ("Delta_5", delta_graph(5), "jis", None, DEFAULT_LIMIT_S),
        ("Delta_6", delta_graph(6), "not_jis", None, DELTA6_LIMIT_S),
        ("K_{2,3} + hub edge", k23_plus_hub_edge(), "not_jis", "odd-parity-cycle", DEFAULT_LIMIT_S),
        ("K_{2,3} + rim edge", complete_bipartite(2, 3).with_edges(add=[(2, 3)]), "not_jis", None, DEFAULT_LIMIT_S),
    ]
    cases += [(f"theta_{k}", theta_graph(k), "not_jis" if k in (4, 5) else "jis", None, DEFAULT_LIMIT_S) for k in range(4, 9)]
    for name, g, want, rule, limit in cases:
        d, in_time = _timed_decide(g, limit)
        c.expect(d.outcome == want, f"{name} gave {d.outcome}")
        c.expect(in_time, f"{name} over {limit:.0f}s")
        if rule is not None:
            got = d.verdict.rule if d.verdict else None
            c.expect(got == rule, f"{name} rule {got}")
        if want == "jis" and d.is_jis:
            c.expect(verify_realization(g, d.certificate.family).ok, f"{name} certificate")
    rim = complete_bipartite(2, 3).with_edges(add=[(2, 3)])
    c.expect(is_isomorphic(rim, delta_graph(2)) is not None, "rim-edge graph is not Delta_2")
    c.note(f"{len(cases)} fixtures")


def _random_tree(rng: random.Random, n: int):
    return from_edge_list(n, [(v, rng.randrange(v)) for v in range(1, n)])


def criterion_2(c: Checks) -> None:
    for k in range(1, 11):
        c.expect(verify_realization(complete_graph(k), realize_complete(k)).ok, f"K_{k}")
        if k >= 3:
            c.expect(verify_realization(cycle_graph(k), realize_cycle(k)).ok, f"C_{k}")
    rng = random.Random(2024)
    for i in range(50):
        t = _random_tree(rng, rng.randint(1, 10))
        c.expect(verify_realization(t, realize_by_core(t)).ok, f"tree {i}")
    makers = [
        lambda: (complete_graph(k := rng.randint(1, 5)), realize_complete(k)),
        lambda: (cycle_graph(k := rng.randint(3, 7)), realize_cycle(k)),
        lambda: (t := _random_tree(rng, rng.randint(1, 8)), realize_by_core(t)),
    ]
    for i in range(20):
        a, b = rng.choice(makers)(), rng.choice(makers)()
        fam = combine_components([a, b])
        c.expect(verify_realization(disjoint_union(a[0], b[0]), fam).ok, f"union {i}")
    for (g1, f1), (g2, f2), name in [
        ((cycle_graph(3), realize_cycle(3)), (cycle_graph(4), realize_cycle(4)), "C_3 x C_4"),
        ((complete_graph(3), realize_complete(3)), (complete_graph(3), realize_complete(3)), "K_3 x K_3"),
    ]:
        c.expect(verify_realization(cartesian_product(g1, g2), product_realization(f1, f2)).ok, name)


def criterion_3(c: Checks) -> None:
    checked = 0
    for n, level in graphs_up_to_iso(6).items():
        for g in level:
            d = decide_jis(g)
            if not d.is_jis or n == 0:
                continue
            fam = d.certificate.family
            top_m, top_ground = connected_bounds(n) if g.is_connected() else (n, 2 * n)
            checked += 1
            c.expect(fam.m <= top_m and fam.ground_size <= top_ground, f"{g.edges()} m={fam.m} N={fam.ground_size}")
    c.note(f"{checked} certificates")


def criterion_4(c: Checks) -> None:
    start = time.perf_counter()
    total = 0
    for level in graphs_up_to_iso(5).values():
        for g in level:
            total += 1
            a, b = decide_jis(g).outcome, brute_force_oracle(g).outcome
            c.expect(a == b, f"{g.edges()}: search {a}, oracle {b}")
    elapsed = time.perf_counter() - start
    c.expect(elapsed <= ORACLE_LIMIT_S, f"took {elapsed:.0f}s")
    c.note(f"{total} graphs in {elapsed:.1f}s")


def criterion_5(c: Checks) -> None:
    corpus = [g for level in graphs_up_to_iso(6).values() for g in level]
    corpus += graphs_up_to_iso(7, connected=True)[7]
    certified = 0
    for g in corpus:
        d = decide_jis(g)
        verdict = run_filters(g)
        if d.is_jis:
            certified += 1
            c.expect(verdict.passed, f"certified {g.edges()} rejected by {verdict.rule}")
        else:
            c.expect(recheck_witness(g, verdict), f"witness for {g.edges()}")
    for name, g in [
        ("K_{2,3}", complete_bipartite(2, 3)),
        ("Delta_2", delta_graph(2)),
        ("Delta_4", delta_graph(4)),
        ("Delta_6", delta_graph(6)),
    ]:
        c.expect(run_filters(g).passed, f"{name} rejected by filters")
        c.expect(decide_jis(g).outcome == "not_jis", f"{name} not settled as not JIS")
    c.note(f"{certified} certified of {len(corpus)}")


def _path_diameter_by_enumeration(n: int) -> int:
    """Independent of the search: every m up to n, every m-subset of 1..2n."""
    best: dict[tuple[int, int], int] = {}
    for m in range(1, n + 1):
        pool = [frozenset(s) for s in combinations(range(1, 2 * n + 1), m)]

        def extend(chain):
            if len(chain) == n:
                for v, w in combinations(range(n), 2):
                    d = m - len(chain[v] & chain[w])
                    best[(v, w)] = min(best.get((v, w), d), d)
                return
            for s in pool:
                if len(s & chain[-1]) == m - 1 and all(s != t and len(s & t) != m - 1 for t in chain[:-1]):
                    extend(chain + [s])

        extend([frozenset(range(1, m + 1))])
    return max(best.values())


def criterion_6(c: Checks) -> None:
    g = delta_graph(4).delete_vertex(6)
    r = jis_diameter(g)
    c.expect(r.diameter == 3 and r.pair == (0, 5), f"Delta_4 - v_7 gave {r.diameter} at {r.pair}")
    for n in range(2, 7):
        got = jis_diameter(complete_graph(n)).diameter
        c.expect(got == 1, f"K_{n} gave {got}")
    expected = _path_diameter_by_enumeration(4)
    got = jis_diameter(path_graph(4)).diameter
    c.expect(got == expected, f"P_4 gave {got}, enumeration {expected}")
    c.note(f"P_4 = {got} (enumeration {expected})")


def criterion_7(c: Checks) -> None:
    for n in (5, 6):
        dg = distance_graph(q_family(n))
        want = complete_graph(n).with_edges(remove=[(n - 2, n - 1)])
        ok = is_isomorphic(dg, want) is not None
        c.expect(ok, f"q-family n={n} gives {dg.edge_count()} edges, want {want.edge_count()}")
        c.expect(run_filters(want).rule == "maxclique-overlap", f"K_{n} - e passes filters")
    delta3 = decide_jis(delta_graph(3)).certificate.family
    for name, fam, target in [
        ("C_4", realize_cycle(4), cycle_graph(4)),
        ("C_5", realize_cycle(5), cycle_graph(5)),
        ("K_3", realize_complete(3), complete_graph(3)),
        ("Delta_3", delta3, delta_graph(3)),
    ]:
        c.expect(is_isomorphic(distance_graph(jis_family_to_graphs(fam)), target) is not None, f"round trip {name}")
    rng = random.Random(77)
    pairs = 0
    while pairs < 100:
        n = rng.randint(2, 7)
        size = rng.randint(0, n * (n - 1) // 2)
        all_pairs = list(combinations(range(n), 2))
        g, h, k = (from_edge_list(n, rng.sample(all_pairs, size)) for _ in range(3))
        d = edge_move_distance(g, h)
        c.expect((d == 0) == (is_isomorphic(g, h) is not None), f"identity {pairs}")
        c.expect(d == edge_move_distance(h, g), f"symmetry {pairs}")
        c.expect(edge_move_distance(g, k) <= d + edge_move_distance(h, k), f"triangle {pairs}")
        pairs += 1
    c.note(f"{pairs} metric pairs")


def criterion_8(c: Checks) -> None:
    start = time.perf_counter()
    d = decide_jis(delta_graph(7), SearchConfig(node_limit=DELTA7_BUDGET))
    elapsed = time.perf_counter() - start
    consistent = {"jis": "consistent", "not_jis": "contradicts", "inconclusive": "undecided"}[d.outcome]
    c.note(f"Delta_7 {d.outcome} after {d.stats.nodes} nodes in {elapsed:.1f}s ({consistent} with odd-i conjecture)")


CRITERIA = [
    (1, "verdict fixtures", criterion_1),
    (2, "constructor soundness sweep", criterion_2),
    (3, "certificate size bounds over the census", criterion_3),
    (4, "search agrees with brute-force oracle up to order 5", criterion_4),
    (5, "filter soundness and incompleteness witnesses", criterion_5),
    (6, "JIS-diameter values", criterion_6),
    (7, "edge-move distance graphs and metric", criterion_7),
    (8, "Delta_7 exploration (reported only)", criterion_8),
]


def run_criterion(number: int) -> tuple[str, Checks]:
    _, title, fn = CRITERIA[number - 1]
    checks = Checks()
    fn(checks)
    return _report(number, title, checks), checks


@pytest.mark.parametrize("number", [n for n, _, _ in CRITERIA])
def test_criterion(number, capsys):
    line, checks = run_criterion(number)
    with capsys.disabled():
        print("\n" + line)
    assert not checks.failures, line


if __name__ == "__main__":
    failed = 0
    for number, _, _ in CRITERIA:
        line, checks = run_criterion(number)
        print(line, flush=True)
        failed += bool(checks.failures)
    sys.exit(1 if failed else 0)
