"""Parallel classes, series classes, triangles, and Theta / Infinity classes."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Literal

from .errors import CapExceededError, PreconditionError
from .graph import (
    Infinity,
    Multigraph,
    OtherShape,
    Theta,
    classify_nullity2_shape,
    contract_components,
    count_components,
    find_bridges,
    require_connected_bridgeless_loopless,
)

DEFAULT_BRUTEFORCE_CAP = 22


@dataclass(frozen=True)
class EdgePartition:
    blocks: tuple[frozenset[int], ...]
    kind: Literal["parallel", "series"]

    def __len__(self):
        return len(self.blocks)

    @property
    def count(self) -> int:
        return len(self.blocks)

    @property
    def nontrivial(self) -> tuple[frozenset[int], ...]:
        return tuple(b for b in self.blocks if len(b) >= 2)

    @property
    def nontrivial_count(self) -> int:
        return len(self.nontrivial)


@dataclass(frozen=True)
class SpecialClass:
    edges: frozenset[int]
    kind: Theta | Infinity

    @property
    def is_theta(self) -> bool:
        return isinstance(self.kind, Theta)

    def key(self):
        return (tuple(sorted(self.edges)), str(self.kind))


def _reject_loops(g: Multigraph) -> None:
    if g.has_loop():
        raise PreconditionError("graph must be loopless")


def parallel_classes(g: Multigraph) -> EdgePartition:
    _reject_loops(g)
    groups: dict[tuple[int, int], list[int]] = {}
    for eid, (u, v) in enumerate(g.edges):
        groups.setdefault((min(u, v), max(u, v)), []).append(eid)
    blocks = sorted((frozenset(b) for b in groups.values()), key=min)
    return EdgePartition(tuple(blocks), "parallel")


def _without(edges, drop) -> list:
    return [e for k, e in enumerate(edges) if k not in drop]


def series_classes(g: Multigraph) -> EdgePartition:
    """Classes of the relation "e = f, or {e, f} is a 2-edge cut".

    Works on disconnected bridgeless graphs, where classes live inside single
    components.  Every block is checked against the cut criterion
    c(G - C) = c(G) + |C| - 1 with G - C bridgeless.
    """
    _reject_loops(g)
    if find_bridges(g.n, g.edges):
        raise PreconditionError("graph must be bridgeless")
    m = g.m
    base = count_components(g.n, g.edges)
    parent = list(range(m))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for e, f in combinations(range(m), 2):
        if find(e) == find(f):
            continue
        if count_components(g.n, _without(g.edges, {e, f})) > base:
            parent[find(f)] = find(e)
    groups: dict[int, list[int]] = {}
    for e in range(m):
        groups.setdefault(find(e), []).append(e)
    blocks = tuple(sorted((frozenset(b) for b in groups.values()), key=min))
    for block in blocks:
        rest = _without(g.edges, block)
        if count_components(g.n, rest) != base + len(block) - 1 or find_bridges(g.n, rest):
            raise AssertionError(f"series block {sorted(block)} fails the cut criterion")
    return EdgePartition(blocks, "series")


def series_relation_is_transitive(g: Multigraph) -> bool:
    """Check the pairwise 2-cut relation directly (no union-find shortcut)."""
    m = g.m
    base = count_components(g.n, g.edges)
    rel = [[e == f for f in range(m)] for e in range(m)]
    for e, f in combinations(range(m), 2):
        if count_components(g.n, _without(g.edges, {e, f})) > base:
            rel[e][f] = rel[f][e] = True
    return all(
        not (rel[a][b] and rel[b][c]) or rel[a][c] for a in range(m) for b in range(m) for c in range(m)
    )


def simplify(g: Multigraph) -> tuple[Multigraph, dict[frozenset[int], int]]:
    """Replace each parallel class by a single edge."""
    classes = parallel_classes(g)
    edges = []
    classmap = {}
    for block in classes.blocks:
        classmap[block] = len(edges)
        edges.append(g.edges[min(block)])
    return Multigraph(g.n, tuple(edges)), classmap


def triangle_count(gsimple: Multigraph) -> int:
    _reject_loops(gsimple)
    adj: list[set[int]] = [set() for _ in range(gsimple.n)]
    for u, v in gsimple.edges:
        if v in adj[u]:
            raise PreconditionError("triangle_count needs a simple graph (parallel edge found)")
        adj[u].add(v)
        adj[v].add(u)
    count = 0
    for u, v in gsimple.edges:
        lo, hi = min(u, v), max(u, v)
        count += sum(1 for w in adj[lo] & adj[hi] if w > hi)
    return count


def simple_triangle_count(g: Multigraph) -> int:
    """Triangles of the simplified graph."""
    return triangle_count(simplify(g)[0])


# ---------------------------------------------------------------------------
# Theta / Infinity classes


def _shape_of(g: Multigraph, cls: frozenset[int]) -> Theta | Infinity | None:
    shape = classify_nullity2_shape(contract_components(g, cls).graph)
    return None if isinstance(shape, OtherShape) else shape


def _closure(g: Multigraph, A: set[int]) -> set[int]:
    """Grow A by the bridges of G - A until G - A is bridgeless."""
    A = set(A)
    while True:
        rest_ids = [e for e in range(g.m) if e not in A]
        br = find_bridges(g.n, [g.edges[e] for e in rest_ids])
        if not br:
            return A
        A.update(rest_ids[k] for k in br)


def special_classes(g: Multigraph) -> list[SpecialClass]:
    """Theta and Infinity classes by closing unions of two series classes.

    For every pair of series classes the union is closed under "add the
    bridges of the remainder"; the result is kept when removing it leaves
    exactly |A| - 1 components.  A Theta class is reached from each of the
    three pairs of its branches and an Infinity class from its single pair;
    both counts are checked.
    """
    require_connected_bridgeless_loopless(g)
    series = series_classes(g).blocks
    hits: dict[frozenset[int], int] = {}
    for ci, cj in combinations(series, 2):
        A = _closure(g, set(ci | cj))
        rest = [g.edges[e] for e in range(g.m) if e not in A]
        if count_components(g.n, rest) != len(A) - 1:
            continue
        key = frozenset(A)
        hits[key] = hits.get(key, 0) + 1
    found = []
    for edges, count in hits.items():
        shape = _shape_of(g, edges)
        if shape is None:
            raise AssertionError(f"closed pair {sorted(edges)} does not contract to a Theta or Infinity graph")
        expected = 3 if isinstance(shape, Theta) else 1
        if count != expected:
            raise AssertionError(f"{shape} class {sorted(edges)} reached by {count} pairs, expected {expected}")
        found.append(SpecialClass(edges, shape))
    found.sort(key=SpecialClass.key)
    return found


def special_classes_bruteforce(g: Multigraph, cap: int | None = None) -> list[SpecialClass]:
    """Scan every C subset of E for c(G - C) = |C| - 1 with G - C bridgeless."""
    require_connected_bridgeless_loopless(g)
    cap = DEFAULT_BRUTEFORCE_CAP if cap is None else cap
    if g.m > cap:
        raise CapExceededError(f"special-class brute force: {g.m} edges exceeds cap of {cap}")
    m = g.m
    found = []
    for mask in range(1, 1 << m):
        size = mask.bit_count()
        rest = [g.edges[e] for e in range(m) if not mask >> e & 1]
        if count_components(g.n, rest) != size - 1:
            continue
        if find_bridges(g.n, rest):
            continue
        edges = frozenset(e for e in range(m) if mask >> e & 1)
        shape = _shape_of(g, edges)
        if shape is not None:
            found.append(SpecialClass(edges, shape))
    found.sort(key=SpecialClass.key)
    return found


# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class StructureReport:
    n: int
    m: int
    p: int
    p_star: int
    s: int
    s_star: int
    triangles: int
    theta: int
    infinity: int
    parallel: EdgePartition
    series: EdgePartition
    classes: list[SpecialClass] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "p": self.p,
            "p_star": self.p_star,
            "s": self.s,
            "s_star": self.s_star,
            "triangles": self.triangles,
            "theta": self.theta,
            "infinity": self.infinity,
            "parallel_classes": [sorted(b) for b in self.parallel.blocks],
            "series_classes": [sorted(b) for b in self.series.blocks],
            "special_classes": [{"edges": sorted(c.edges), "kind": str(c.kind)} for c in self.classes],
        }


def structure_report(g: Multigraph) -> StructureReport:
    require_connected_bridgeless_loopless(g)
    par = parallel_classes(g)
    ser = series_classes(g)
    classes = special_classes(g)
    theta_count = sum(1 for c in classes if c.is_theta)
    return StructureReport(
        n=g.n,
        m=g.m,
        p=par.count,
        p_star=par.nontrivial_count,
        s=ser.count,
        s_star=ser.nontrivial_count,
        triangles=simple_triangle_count(g),
        theta=theta_count,
        infinity=len(classes) - theta_count,
        parallel=par,
        series=ser,
        classes=classes,
    )

