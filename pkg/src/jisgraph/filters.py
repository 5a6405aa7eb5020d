"""Cheap necessary conditions for a graph to be JIS.

Both screens read the maximal cliques.  In a JIS graph two maxcliques share
at most two vertices, a two-vertex overlap allows no edge between the
leftover parts, a one-vertex overlap lets each leftover vertex see at most
one vertex on the other side, and the maxcliques can be 2-colored so that
cliques overlapping in exactly two vertices get different colors.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Sequence

from .graph import Graph, connected_components, maximal_cliques

MAXCLIQUE_OVERLAP = "maxclique-overlap"
TWO_SHARED_CROSS_EDGE = "two-shared-cross-edge"
ONE_SHARED_DOUBLE_EDGE = "one-shared-double-edge"
ODD_PARITY_CYCLE = "odd-parity-cycle"


@dataclass(frozen=True)
class FilterVerdict:
    status: str  # "pass" or "violation"
    rule: str | None = None
    witness: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_json_dict(self) -> dict:
        return {"status": self.status, "rule": self.rule, "witness": self.witness}

    def describe(self) -> str:
        """One line with 1-based vertex labels."""
        if self.passed:
            return "pass"

        def lab(vs: Sequence[int]) -> str:
            return "{" + ",".join(f"v{v + 1}" for v in vs) + "}"

        w = self.witness
        if self.rule == ODD_PARITY_CYCLE:
            return f"{self.rule}: maxcliques " + " -> ".join(lab(c) for c in w["cycle"]) + " form an odd cycle"
        text = f"{self.rule}: maxcliques {lab(w['cliques'][0])} and {lab(w['cliques'][1])} share {lab(w['shared'])}"
        if self.rule == TWO_SHARED_CROSS_EDGE:
            text += f"; cross edge v{w['edge'][0] + 1}-v{w['edge'][1] + 1}"
        elif self.rule == ONE_SHARED_DOUBLE_EDGE:
            text += f"; v{w['vertex'] + 1} sees {lab(w['neighbors'])} across"
        return text


PASS = FilterVerdict("pass")


def check_maxclique_intersections(g: Graph, cliques: Sequence[Sequence[int]]) -> FilterVerdict:
    for a, b in combinations(cliques, 2):
        sa, sb = set(a), set(b)
        shared = sorted(sa & sb)
        witness = {"cliques": [list(a), list(b)], "shared": shared}
        if len(shared) > 2:
            return FilterVerdict("violation", MAXCLIQUE_OVERLAP, witness)
        only_a, only_b = sorted(sa - sb), sorted(sb - sa)
        if len(shared) == 2:
            for x in only_a:
                for y in only_b:
                    if g.adjacent(x, y):
                        return FilterVerdict("violation", TWO_SHARED_CROSS_EDGE, {**witness, "edge": [x, y]})
        elif len(shared) == 1:
            for side, other in ((only_a, only_b), (only_b, only_a)):
                for x in side:
                    seen = [y for y in other if g.adjacent(x, y)]
                    if len(seen) > 1:
                        return FilterVerdict(
                            "violation", ONE_SHARED_DOUBLE_EDGE, {**witness, "vertex": x, "neighbors": seen}
                        )
    return PASS


def check_parity(g: Graph, cliques: Sequence[Sequence[int]]) -> FilterVerdict:
    """2-color the maxcliques joined when they share exactly two vertices."""
    k = len(cliques)
    sets = [set(c) for c in cliques]
    adj: list[list[int]] = [[] for _ in range(k)]
    for i, j in combinations(range(k), 2):
        if len(sets[i] & sets[j]) == 2:
            adj[i].append(j)
            adj[j].append(i)
    color = [-1] * k
    parent = [-1] * k
    depth = [0] * k
    for root in range(k):
        if color[root] != -1:
            continue
        color[root] = 0
        queue = deque([root])
        while queue:
            i = queue.popleft()
            for j in adj[i]:
                if color[j] == -1:
                    color[j] = 1 - color[i]
                    parent[j] = i
                    depth[j] = depth[i] + 1
                    queue.append(j)
                elif color[j] == color[i]:
                    cycle = _tree_cycle(i, j, parent, depth)
                    return FilterVerdict(
                        "violation", ODD_PARITY_CYCLE, {"cycle": [list(cliques[c]) for c in cycle]}
                    )
    return PASS


def _tree_cycle(i: int, j: int, parent: list[int], depth: list[int]) -> list[int]:
    # Closing edge i-j plus the two tree paths up to their common ancestor.
    left, right = [i], [j]
    a, b = i, j
    while depth[a] > depth[b]:
        a = parent[a]
        left.append(a)
    while depth[b] > depth[a]:
        b = parent[b]
        right.append(b)
    while a != b:
        a, b = parent[a], parent[b]
        left.append(a)
        right.append(b)
    return left + right[-2::-1]


def run_filters(g: Graph) -> FilterVerdict:
    for block in connected_components(g):
        comp = g.induced_subgraph(block)
        cliques = maximal_cliques(comp)
        for check in (check_maxclique_intersections, check_parity):
            verdict = check(comp, cliques)
            if not verdict.passed:
                return _lift(verdict, block)
    return PASS


def _lift(verdict: FilterVerdict, block: list[int]) -> FilterVerdict:
    # Map component-local vertex indices back to the whole graph.
    def up(x):
        if isinstance(x, list):
            return [up(y) for y in x]
        return block[x]

    return FilterVerdict(verdict.status, verdict.rule, {k: up(v) for k, v in verdict.witness.items()})


def recheck_witness(g: Graph, verdict: FilterVerdict) -> bool:
    """Independently confirm that a reported violation is real."""
    if verdict.passed:
        return True
    w = verdict.witness
    full = set(maximal_cliques(g))

    def is_maxclique(c) -> bool:
        return tuple(sorted(c)) in full

    if verdict.rule == ODD_PARITY_CYCLE:
        cyc = w["cycle"]
        if len(cyc) % 2 == 0 or len(cyc) < 3 or not all(is_maxclique(c) for c in cyc):
            return False
        if len({tuple(c) for c in cyc}) != len(cyc):
            return False
        return all(len(set(cyc[i]) & set(cyc[(i + 1) % len(cyc)])) == 2 for i in range(len(cyc)))
    a, b = w["cliques"]
    if not (is_maxclique(a) and is_maxclique(b)) or a == b:
        return False
    shared = set(a) & set(b)
    if verdict.rule == MAXCLIQUE_OVERLAP:
        return len(shared) >= 3
    if verdict.rule == TWO_SHARED_CROSS_EDGE:
        x, y = w["edge"]
        return len(shared) == 2 and g.adjacent(x, y) and {x, y} <= set(a) ^ set(b) and not {x, y} <= set(a) and not {x, y} <= set(b)
    if verdict.rule == ONE_SHARED_DOUBLE_EDGE:
        x = w["vertex"]
        other = set(b) - set(a) if x in set(a) else set(a) - set(b)
        return len(shared) == 1 and x not in shared and sum(g.adjacent(x, y) for y in other) >= 2
    return False
