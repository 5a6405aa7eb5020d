"""Set-family realizations of graphs inside Johnson graphs.

A family of distinct ``m``-sets realizes a graph when two vertices are
adjacent exactly when their sets share ``m - 1`` elements.  Ground elements
are the positive integers ``1..ground_size``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .graph import (
    Graph,
    cartesian_product,
    complete_graph,
    connected_components,
    cycle_graph,
    disjoint_union,
    is_isomorphic,
    two_core,
)


def to_mask(s: Iterable[int]) -> int:
    mask = 0
    for e in s:
        mask |= 1 << (e - 1)
    return mask


def from_mask(mask: int) -> tuple[int, ...]:
    out = []
    e = 1
    while mask:
        if mask & 1:
            out.append(e)
        mask >>= 1
        e += 1
    return tuple(out)


@dataclass(frozen=True)
class SetFamily:
    m: int
    ground_size: int
    sets: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.m < 0 or self.ground_size < 0:
            raise ValueError("m and ground_size must be non-negative")
        for v, s in enumerate(self.sets):
            if len(s) != self.m or len(set(s)) != self.m:
                raise ValueError(f"set {v} has {len(set(s))} distinct elements, expected {self.m}")
            if any(not 1 <= e <= self.ground_size for e in s):
                raise ValueError(f"set {v} has an element outside 1..{self.ground_size}")
            if list(s) != sorted(s):
                raise ValueError(f"set {v} is not sorted")

    @classmethod
    def of(cls, sets: Iterable[Iterable[int]], ground_size: int | None = None) -> SetFamily:
        """Build a family from arbitrary iterables; ``m`` is taken from the first set."""
        normalized = tuple(tuple(sorted(set(s))) for s in sets)
        m = len(normalized[0]) if normalized else 0
        top = max((max(s) for s in normalized if s), default=0)
        return cls(m, top if ground_size is None else ground_size, normalized)

    @classmethod
    def from_masks(cls, m: int, masks: Sequence[int], ground_size: int | None = None) -> SetFamily:
        sets = tuple(from_mask(x) for x in masks)
        top = max((s[-1] for s in sets if s), default=0)
        return cls(m, top if ground_size is None else ground_size, sets)

    def __len__(self) -> int:
        return len(self.sets)

    def masks(self) -> list[int]:
        return [to_mask(s) for s in self.sets]

    def used_elements(self) -> set[int]:
        return set().union(*self.sets) if self.sets else set()

    def compact(self) -> str:
        """Render sets the way they are written by hand, e.g. ``1234 1235``."""
        sep = "" if self.ground_size < 10 else ","
        return " ".join(sep.join(map(str, s)) or "{}" for s in self.sets)

    def to_json_dict(self) -> dict:
        return {"order": len(self.sets), "m": self.m, "ground_size": self.ground_size, "sets": [list(s) for s in self.sets]}


@dataclass(frozen=True)
class VerifyReport:
    ok: bool
    violations: list[tuple[tuple[int, int], int, bool]] = field(default_factory=list)
    duplicate_sets: list[tuple[int, int]] = field(default_factory=list)

    def to_json_dict(self) -> dict:
        return {
            "ok": self.ok,
            "violations": [
                {"pair": list(pair), "intersection": inter, "adjacent": adj} for pair, inter, adj in self.violations
            ],
            "duplicate_sets": [list(p) for p in self.duplicate_sets],
        }


def verify_realization(g: Graph, family: SetFamily) -> VerifyReport:
    """Check every vertex pair; the report lists all violations."""
    if len(family) != g.order:
        raise ValueError(f"family has {len(family)} sets but the graph has {g.order} vertices")
    masks = family.masks()
    violations = []
    duplicates = []
    for v in range(g.order):
        for w in range(v + 1, g.order):
            inter = (masks[v] & masks[w]).bit_count()
            if masks[v] == masks[w]:
                duplicates.append((v, w))
            adjacent = g.adjacent(v, w)
            if adjacent != (inter == family.m - 1):
                violations.append(((v, w), inter, adjacent))
    return VerifyReport(not violations and not duplicates, violations, duplicates)


@dataclass(frozen=True)
class Certificate:
    family: SetFamily
    graph_order: int
    verified: bool = False

    @classmethod
    def issue(cls, g: Graph, family: SetFamily) -> Certificate:
        report = verify_realization(g, family)
        if not report.ok:
            raise AssertionError(f"family does not realize the graph: {report.to_json_dict()}")
        return cls(family, g.order, True)

    def to_json_dict(self) -> dict:
        return self.family.to_json_dict()

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), separators=(",", ":"))


def family_from_json(data: dict) -> SetFamily:
    """Parse the certificate interchange object; a wrapping ``certificate`` key is accepted."""
    if "certificate" in data and isinstance(data["certificate"], dict):
        data = data["certificate"]
    try:
        sets = [tuple(sorted(int(e) for e in s)) for s in data["sets"]]
        m = int(data["m"])
        ground = int(data["ground_size"])
    except (KeyError, TypeError) as exc:
        raise ValueError(f"certificate JSON is missing fields: {exc}") from exc
    if "order" in data and int(data["order"]) != len(sets):
        raise ValueError(f"certificate order {data['order']} disagrees with {len(sets)} sets")
    return SetFamily(m, ground, tuple(sets))


def normalize(family: SetFamily) -> SetFamily:
    """Strip the common intersection and relabel by first appearance."""
    if not family.sets:
        raise ValueError("cannot normalize an empty family")
    core = set(family.sets[0]).intersection(*family.sets[1:])
    relabel: dict[int, int] = {}
    for s in family.sets:
        for e in s:
            if e not in core and e not in relabel:
                relabel[e] = len(relabel) + 1
    sets = tuple(tuple(sorted(relabel[e] for e in s if e not in core)) for s in family.sets)
    return SetFamily(family.m - len(core), len(relabel), sets)


def f_distance(family: SetFamily, v: int, w: int) -> int:
    return len(set(family.sets[v]) - set(family.sets[w]))


def realize_complete(k: int) -> SetFamily:
    if k < 1:
        raise ValueError("complete graph realizer needs k >= 1")
    return SetFamily(1, k, tuple((i,) for i in range(1, k + 1)))


def realize_cycle(k: int) -> SetFamily:
    if k < 3:
        raise ValueError("cycle realizer needs k >= 3")
    return SetFamily.of([{i, i % k + 1} for i in range(1, k + 1)], ground_size=k)


def extend_low_degree(family: SetFamily, neighbor: int | None) -> SetFamily:
    """Realize the graph plus one new vertex of degree 0 or 1 (appended last).

    Every old set gains a fresh element ``a``.  A pendant vertex on
    ``neighbor`` gets that neighbor's old set plus a second fresh ``b``.  An
    isolated vertex gets the first set minus its largest element plus fresh
    ``b`` and ``c``, which keeps it two elements away from everything.
    An empty family extends to ``{{1}}``.
    """
    if not family.sets:
        if neighbor is not None:
            raise ValueError("an empty family has no vertex to attach to")
        return SetFamily(1, 1, ((1,),))
    if neighbor is not None and not 0 <= neighbor < len(family):
        raise ValueError(f"neighbor {neighbor} is not a vertex of the family")
    if neighbor is None and family.m == 0:
        # Only a single empty set can have m = 0.
        return SetFamily(2, 4, ((1, 2), (3, 4)))
    n = family.ground_size
    a, b, c = n + 1, n + 2, n + 3
    sets = [s + (a,) for s in family.sets]
    if neighbor is not None:
        sets.append(family.sets[neighbor] + (b,))
        ground = b
    else:
        sets.append(family.sets[0][:-1] + (b, c))
        ground = c
    return SetFamily(family.m + 1, ground, tuple(sets))


def realize_by_core(g: Graph, core_family: SetFamily | None = None) -> SetFamily:
    """Realize ``g`` from a realization of its 2-core by replaying the stripped vertices.

    ``core_family`` is indexed like the core returned by ``two_core`` and may
    be omitted when the core is empty.
    """
    core, survivors, removal = two_core(g)
    if core.order and core_family is None:
        raise ValueError("the 2-core is non-empty; a realization of it is required")
    if core.order:
        report = verify_realization(core, core_family)  # type: ignore[arg-type]
        if not report.ok:
            raise ValueError("core_family does not realize the 2-core")
        family = core_family
        placed = list(survivors)
    else:
        family = SetFamily(0, 0, ())
        placed = []
    position = {v: i for i, v in enumerate(placed)}
    for v, nbr in reversed(removal):
        family = extend_low_degree(family, None if nbr is None else position[nbr])  # type: ignore[arg-type]
        position[v] = len(placed)
        placed.append(v)
    sets = [()] * g.order
    for i, v in enumerate(placed):
        sets[v] = family.sets[i]  # type: ignore[union-attr]
    return SetFamily(family.m, family.ground_size, tuple(sets))  # type: ignore[union-attr]


def _shift(family: SetFamily, offset: int) -> list[tuple[int, ...]]:
    return [tuple(e + offset for e in s) for s in family.sets]


def combine_components(parts: Sequence[tuple[Graph, SetFamily]]) -> SetFamily:
    """Realize the disjoint union of the parts, in the order given.

    Grounds are made disjoint, smaller set sizes are padded with leading
    elements of the first set of the widest family, and each part gets its
    own tag element.  The result is re-verified.
    """
    if not parts:
        raise ValueError("combine_components needs at least one part")
    for i, (g, fam) in enumerate(parts):
        if not verify_realization(g, fam).ok:
            raise ValueError(f"part {i} is not a valid realization")
        if fam.m == 0 and len(fam) > 0:
            raise ValueError(f"part {i} uses 0-sets; realize a single vertex as {{1}}")
    shifted = []
    offset = 0
    for _, fam in parts:
        shifted.append(_shift(fam, offset))
        offset += fam.ground_size
    widest = max(range(len(parts)), key=lambda i: (parts[i][1].m, -i))
    top = parts[widest][1].m
    first = shifted[widest][0] if shifted[widest] else ()
    sets: list[tuple[int, ...]] = []
    for i, (_, fam) in enumerate(parts):
        pad = first[: top - fam.m]
        tag = offset + 1 + i
        sets += [tuple(sorted(s + pad + (tag,))) for s in shifted[i]]
    combined = SetFamily(top + 1, offset + len(parts), tuple(sets))
    union = parts[0][0]
    for g, _ in parts[1:]:
        union = disjoint_union(union, g)
    report = verify_realization(union, combined)
    if not report.ok:
        raise AssertionError(f"component assembly broke the realization: {report.to_json_dict()}")
    return combined


def product_realization(fg: SetFamily, fh: SetFamily) -> SetFamily:
    """Sets ``S_x | S'_y`` for the product vertex ``(x, y)``, row-major."""
    offset = fg.ground_size
    sets = [tuple(sorted(sx + tuple(e + offset for e in sy))) for sx in fg.sets for sy in fh.sets]
    return SetFamily(fg.m + fh.m, fg.ground_size + fh.ground_size, tuple(sets))


def realize_constructively(g: Graph) -> SetFamily | None:
    """Realization from the explicit constructions alone, or ``None``.

    Works component by component: a component whose 2-core is empty, a
    cycle, or complete is realized directly; anything else returns ``None``.
    """
    blocks = connected_components(g)
    if not blocks:
        return SetFamily(0, 0, ())
    parts = []
    for block in blocks:
        comp = g.induced_subgraph(block)
        core, _, _ = two_core(comp)
        if core.order == 0:
            fam = realize_by_core(comp)
        else:
            k = core.order
            if core.edge_count() == k * (k - 1) // 2:
                base, target = realize_complete(k), complete_graph(k)
            elif k >= 3 and all(d == 2 for d in core.degrees()) and core.is_connected():
                base, target = realize_cycle(k), cycle_graph(k)
            else:
                return None
            phi = is_isomorphic(core, target)
            assert phi is not None
            fam = realize_by_core(comp, SetFamily(base.m, base.ground_size, tuple(base.sets[phi[v]] for v in range(k))))
        parts.append((comp, fam))
    if len(parts) == 1:
        fam = parts[0][1]
    else:
        fam = combine_components(parts)
    order = [v for block in blocks for v in block]
    sets = [()] * g.order
    for i, v in enumerate(order):
        sets[v] = fam.sets[i]
    return SetFamily(fam.m, fam.ground_size, tuple(sets))


def realize_product(g: Graph, fg: SetFamily, h: Graph, fh: SetFamily) -> tuple[Graph, SetFamily]:
    return cartesian_product(g, h), product_realization(fg, fh)
