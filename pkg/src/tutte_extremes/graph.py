"""Multigraphs with loops and parallel edges, plus the elementary minor operations.

Vertices are the integers ``0..n-1``; edges are an ordered tuple of endpoint
pairs and an edge id is its position in that tuple.  Deletion keeps every
vertex (spanning-subgraph semantics), so ``restrict(g, A)`` is the spanning
subgraph ``(V, A)``.  Contraction renumbers vertices compactly.  Both
re-index the surviving edges densely and report the old -> new edge map.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, NamedTuple, Sequence

from .errors import GraphParseError, PreconditionError

Edge = tuple[int, int]


@dataclass(frozen=True)
class Multigraph:
    n: int
    edges: tuple[Edge, ...] = ()

    def __post_init__(self):
        if self.n < 0:
            raise PreconditionError(f"negative vertex count {self.n}")
        edges = tuple((int(u), int(v)) for u, v in self.edges)
        for eid, (u, v) in enumerate(edges):
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise PreconditionError(f"edge {eid}=({u},{v}) has an endpoint outside 0..{self.n - 1}")
        object.__setattr__(self, "edges", edges)

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def incidence(self) -> tuple[tuple[int, ...], ...]:
        """Edge ids incident to each vertex; a loop is listed twice."""
        inc: list[list[int]] = [[] for _ in range(self.n)]
        for eid, (u, v) in enumerate(self.edges):
            inc[u].append(eid)
            inc[v].append(eid)
        return tuple(tuple(x) for x in inc)

    def degree(self, v: int) -> int:
        return len(self.incidence[v])

    def loops(self) -> list[int]:
        return [eid for eid, (u, v) in enumerate(self.edges) if u == v]

    def has_loop(self) -> bool:
        return any(u == v for u, v in self.edges)

    def other_end(self, eid: int, v: int) -> int:
        a, b = self.edges[eid]
        return b if a == v else a


@dataclass(frozen=True)
class GraphStats:
    n: int
    m: int
    c: int
    rho: int
    gamma: int


class Minor(NamedTuple):
    """Result of delete/contract/restrict.

    ``edge_map`` sends surviving old edge ids to new ids; removed edges are
    absent.  ``vertex_map`` sends old vertices to new ones.
    """

    graph: Multigraph
    edge_map: dict[int, int]
    vertex_map: dict[int, int]


# ---------------------------------------------------------------------------
# connectivity


class _DSU:
    __slots__ = ("parent",)

    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, a: int) -> int:
        parent = self.parent
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[rb] = ra
        return True


def count_components(n: int, edges: Iterable[Edge]) -> int:
    """Number of connected components of the spanning subgraph ``(range(n), edges)``."""
    dsu = _DSU(n)
    c = n
    for u, v in edges:
        if dsu.union(u, v):
            c -= 1
    return c


def components(g: Multigraph) -> tuple[int, list[int]]:
    """Return ``(count, labels)`` with labels numbered in order of first vertex."""
    dsu = _DSU(g.n)
    for u, v in g.edges:
        dsu.union(u, v)
    labels: list[int] = []
    seen: dict[int, int] = {}
    for v in range(g.n):
        r = dsu.find(v)
        if r not in seen:
            seen[r] = len(seen)
        labels.append(seen[r])
    return len(seen), labels


def stats(g: Multigraph) -> GraphStats:
    c = count_components(g.n, g.edges)
    return GraphStats(n=g.n, m=g.m, c=c, rho=g.n - c, gamma=g.m - g.n + c)


def rank(n: int, edges: Sequence[Edge]) -> int:
    return n - count_components(n, edges)


def nullity(n: int, edges: Sequence[Edge]) -> int:
    return len(edges) - n + count_components(n, edges)


def find_bridges(n: int, edges: Sequence[Edge]) -> set[int]:
    """Bridge edge ids of a raw edge list (iterative lowpoint DFS keyed on edge ids)."""
    inc: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for eid, (u, v) in enumerate(edges):
        if u != v:
            inc[u].append((v, eid))
            inc[v].append((u, eid))
    disc = [-1] * n
    low = [0] * n
    bridges: set[int] = set()
    clock = 0
    for root in range(n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = clock
        clock += 1
        # frames: (vertex, edge id used to enter, iterator position)
        stack = [(root, -1, 0)]
        while stack:
            v, via, pos = stack[-1]
            nbrs = inc[v]
            if pos < len(nbrs):
                stack[-1] = (v, via, pos + 1)
                w, eid = nbrs[pos]
                if eid == via:
                    continue
                if disc[w] == -1:
                    disc[w] = low[w] = clock
                    clock += 1
                    stack.append((w, eid, 0))
                elif disc[w] < low[v]:
                    low[v] = disc[w]
            else:
                stack.pop()
                if stack:
                    parent = stack[-1][0]
                    if low[v] < low[parent]:
                        low[parent] = low[v]
                    if low[v] > disc[parent]:
                        bridges.add(via)
    return bridges


def bridges(g: Multigraph) -> set[int]:
    """Edge ids whose removal increases the number of components."""
    return find_bridges(g.n, g.edges)


def is_bridgeless(g: Multigraph) -> bool:
    return not find_bridges(g.n, g.edges)


def is_connected(g: Multigraph) -> bool:
    return g.n <= 1 or count_components(g.n, g.edges) == 1


def require_connected_bridgeless_loopless(g: Multigraph) -> None:
    if g.has_loop():
        raise PreconditionError("graph must be loopless")
    if not is_connected(g):
        raise PreconditionError("graph must be connected")
    if not is_bridgeless(g):
        raise PreconditionError("graph must be bridgeless")


# ---------------------------------------------------------------------------
# minors


def _check_ids(g: Multigraph, A: Iterable[int]) -> frozenset[int]:
    ids = frozenset(A)
    bad = [e for e in ids if not (isinstance(e, int) and 0 <= e < g.m)]
    if bad:
        raise PreconditionError(f"unknown edge ids {sorted(bad)} (graph has {g.m} edges)")
    return ids


def delete(g: Multigraph, A: Iterable[int]) -> Minor:
    """Remove the edges in ``A``; every vertex is kept."""
    ids = _check_ids(g, A)
    edge_map: dict[int, int] = {}
    kept: list[Edge] = []
    for eid, e in enumerate(g.edges):
        if eid not in ids:
            edge_map[eid] = len(kept)
            kept.append(e)
    return Minor(Multigraph(g.n, tuple(kept)), edge_map, {v: v for v in range(g.n)})


def restrict(g: Multigraph, A: Iterable[int]) -> Minor:
    """The spanning subgraph ``(V, A)``, i.e. ``delete(g, E - A)``."""
    ids = _check_ids(g, A)
    return delete(g, [e for e in range(g.m) if e not in ids])


def contract(g: Multigraph, A: Iterable[int]) -> Minor:
    """Contract every edge of ``A``; loops and parallels created along the way stay."""
    ids = _check_ids(g, A)
    dsu = _DSU(g.n)
    for eid in ids:
        u, v = g.edges[eid]
        dsu.union(u, v)
    vertex_map: dict[int, int] = {}
    roots: dict[int, int] = {}
    for v in range(g.n):
        r = dsu.find(v)
        if r not in roots:
            roots[r] = len(roots)
        vertex_map[v] = roots[r]
    edge_map: dict[int, int] = {}
    kept: list[Edge] = []
    for eid, (u, v) in enumerate(g.edges):
        if eid in ids:
            continue
        edge_map[eid] = len(kept)
        kept.append((vertex_map[u], vertex_map[v]))
    return Minor(Multigraph(len(roots), tuple(kept)), edge_map, vertex_map)


def contract_components(g: Multigraph, A: Iterable[int]) -> Minor:
    """Contract each component of ``g - A`` to a single vertex, keeping only the edges of ``A``."""
    ids = _check_ids(g, A)
    return contract(g, [e for e in range(g.m) if e not in ids])


# ---------------------------------------------------------------------------
# nullity-two shapes


@dataclass(frozen=True)
class Theta:
    parts: tuple[int, int, int]

    def __str__(self):
        return "Theta_{%d,%d,%d}" % self.parts


@dataclass(frozen=True)
class Infinity:
    parts: tuple[int, int]

    def __str__(self):
        return "Infinity_{%d,%d}" % self.parts


@dataclass(frozen=True)
class OtherShape:
    def __str__(self):
        return "Other"


Shape = Theta | Infinity | OtherShape


def _walk(h: Multigraph, start: int, first_edge: int, stop: set[int]) -> tuple[int, int]:
    """Follow a chain of degree-2 vertices; return (length, vertex reached)."""
    length = 1
    prev_edge = first_edge
    v = h.other_end(first_edge, start)
    while v not in stop:
        inc = h.incidence[v]
        nxt = inc[1] if inc[0] == prev_edge else inc[0]
        prev_edge = nxt
        v = h.other_end(nxt, v)
        length += 1
    return length, v


def classify_nullity2_shape(h: Multigraph) -> Shape:
    """Recognise Theta_{k1,k2,k3} and Infinity_{k1,k2} among connected nullity-2 graphs.

    Loops add 2 to the degree of their vertex and count as cycles of length 1.
    """
    st = stats(h)
    if st.c != 1 or st.gamma != 2:
        raise PreconditionError(f"expected a connected graph of nullity 2, got c={st.c}, nullity={st.gamma}")
    degrees = [h.degree(v) for v in range(h.n)]
    high = [v for v, d in enumerate(degrees) if d != 2]
    if len(high) == 2 and all(degrees[v] == 3 for v in high) and not h.has_loop():
        u, w = high
        lengths = []
        for eid in h.incidence[u]:
            length, end = _walk(h, u, eid, {u, w})
            if end != w:
                return OtherShape()
            lengths.append(length)
        k1, k2, k3 = sorted(lengths)
        return Theta((k1, k2, k3))
    if len(high) == 1 and degrees[high[0]] == 4:
        hub = high[0]
        used: set[int] = set()
        lengths = []
        for eid in h.incidence[hub]:
            if eid in used:
                continue
            if h.edges[eid][0] == h.edges[eid][1]:
                used.add(eid)
                lengths.append(1)
                continue
            # walk the cycle, recording edges so the return half-edge is skipped
            prev_edge, v, length = eid, h.other_end(eid, hub), 1
            used.add(eid)
            while v != hub:
                inc = h.incidence[v]
                nxt = inc[1] if inc[0] == prev_edge else inc[0]
                used.add(nxt)
                prev_edge, v = nxt, h.other_end(nxt, v)
                length += 1
            lengths.append(length)
        if len(lengths) != 2:
            return OtherShape()
        k1, k2 = sorted(lengths)
        return Infinity((k1, k2))
    return OtherShape()


# ---------------------------------------------------------------------------
# named graphs


def cycle(k: int) -> Multigraph:
    """C_k; C_1 is a loop and C_2 the dipole D_2."""
    if k == 1:
        return Multigraph(1, ((0, 0),))
    return Multigraph(k, tuple((i, (i + 1) % k) for i in range(k)))


def dipole(k: int) -> Multigraph:
    return Multigraph(2, ((0, 1),) * k)


def path(k: int) -> Multigraph:
    """Path with ``k`` vertices."""
    return Multigraph(k, tuple((i, i + 1) for i in range(k - 1)))


def complete(k: int) -> Multigraph:
    return Multigraph(k, tuple((i, j) for i in range(k) for j in range(i + 1, k)))


def theta(k1: int, k2: int, k3: int) -> Multigraph:
    """Two poles 0 and 1 joined by internally disjoint paths of the given lengths."""
    edges: list[Edge] = []
    n = 2
    for k in (k1, k2, k3):
        prev = 0
        for _ in range(k - 1):
            edges.append((prev, n))
            prev = n
            n += 1
        edges.append((prev, 1))
    return Multigraph(n, tuple(edges))


def infinity(k1: int, k2: int) -> Multigraph:
    """Two cycles of lengths k1, k2 glued at vertex 0."""
    edges: list[Edge] = []
    n = 1
    for k in (k1, k2):
        prev = 0
        for _ in range(k - 1):
            edges.append((prev, n))
            prev = n
            n += 1
        edges.append((prev, 0))
    return Multigraph(n, tuple(edges))


def disjoint_union(*graphs: Multigraph) -> Multigraph:
    edges: list[Edge] = []
    offset = 0
    for g in graphs:
        edges.extend((u + offset, v + offset) for u, v in g.edges)
        offset += g.n
    return Multigraph(offset, tuple(edges))


def cube() -> Multigraph:
    edges = []
    for v in range(8):
        for bit in (1, 2, 4):
            w = v ^ bit
            if v < w:
                edges.append((v, w))
    return Multigraph(8, tuple(edges))


# ---------------------------------------------------------------------------
# text format

Rotation = dict[int, list[tuple[int, int]]]
"""Per vertex, the counterclockwise list of half-edges ``(edge id, end)`` with end 0 or 1."""


def parse_graph(text: str) -> tuple[Multigraph, Rotation | None]:
    """Parse the ``v``/``e``/``r`` line format; rotations are optional."""
    n: int | None = None
    edges: list[Edge] = []
    rotation: Rotation = {}
    rot_lines: list[tuple[int, str]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tag, _, rest = line.partition(" ")
        if n is None:
            if tag != "v":
                raise GraphParseError("first line must be 'v N'", lineno)
            try:
                n = int(rest)
            except ValueError:
                raise GraphParseError(f"bad vertex count {rest!r}", lineno) from None
            if n < 0:
                raise GraphParseError("vertex count must be non-negative", lineno)
            continue
        if tag == "v":
            raise GraphParseError("duplicate 'v' line", lineno)
        if tag == "e":
            if rot_lines:
                raise GraphParseError("edge lines must precede rotation lines", lineno)
            parts = rest.split()
            if len(parts) != 2:
                raise GraphParseError("edge line needs exactly two endpoints", lineno)
            try:
                u, v = int(parts[0]), int(parts[1])
            except ValueError:
                raise GraphParseError(f"bad endpoints {rest!r}", lineno) from None
            if not (0 <= u < n and 0 <= v < n):
                raise GraphParseError(f"endpoint out of range 0..{n - 1}", lineno)
            edges.append((u, v))
        elif tag == "r":
            rot_lines.append((lineno, rest))
        else:
            raise GraphParseError(f"unknown line tag {tag!r}", lineno)
    if n is None:
        raise GraphParseError("missing 'v N' line")
    g = Multigraph(n, tuple(edges))
    for lineno, rest in rot_lines:
        head, sep, tail = rest.partition(":")
        if not sep:
            raise GraphParseError("rotation line needs 'r V: ...'", lineno)
        try:
            v = int(head)
        except ValueError:
            raise GraphParseError(f"bad rotation vertex {head!r}", lineno) from None
        if not 0 <= v < n:
            raise GraphParseError("rotation vertex out of range", lineno)
        if v in rotation:
            raise GraphParseError(f"duplicate rotation for vertex {v}", lineno)
        darts = []
        for tok in tail.split():
            if len(tok) < 2 or tok[-1] not in "ab" or not tok[:-1].isdigit():
                raise GraphParseError(f"bad half-edge token {tok!r}", lineno)
            eid = int(tok[:-1])
            if eid >= len(edges):
                raise GraphParseError(f"half-edge {tok!r} names unknown edge", lineno)
            end = 0 if tok[-1] == "a" else 1
            if edges[eid][end] != v:
                raise GraphParseError(f"half-edge {tok!r} is not incident to vertex {v}", lineno)
            darts.append((eid, end))
        rotation[v] = darts
    return g, (rotation if rot_lines else None)


def format_graph(g: Multigraph, rotation: Rotation | None = None) -> str:
    lines = [f"v {g.n}"]
    lines.extend(f"e {u} {v}" for u, v in g.edges)
    if rotation is not None:
        for v in sorted(rotation):
            toks = " ".join(f"{eid}{'ab'[end]}" for eid, end in rotation[v])
            lines.append(f"r {v}: {toks}".rstrip())
    return "\n".join(lines) + "\n"
