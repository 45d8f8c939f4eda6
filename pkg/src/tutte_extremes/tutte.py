"""Three evaluators of the Tutte polynomial.

* ``tutte_delcon``: deletion-contraction, the workhorse.
* ``tutte_subset``: the rank-nullity sum over all spanning subgraphs.  It
  shares no code path with deletion-contraction and is the independent oracle.
* ``tutte_convolution``: the convolution identity
  ``T(G) = sum_A T(G/A; x, 0) * T(G|A; 0, y)``.  Its factors come from
  ``tutte_delcon``, so it checks the identity rather than acting as a third
  independent algorithm.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Literal

from .errors import CapExceededError
from .graph import Edge, Multigraph, find_bridges, require_connected_bridgeless_loopless
from .poly import BiPoly

DEFAULT_SUBSET_CAP = 22

Method = Literal["delcon", "subset", "convolution"]


@dataclass(frozen=True)
class TutteResult:
    poly: BiPoly
    method: Method
    elapsed: float


# ---------------------------------------------------------------------------
# deletion-contraction


def _shift(terms: dict[tuple[int, int], int], di: int, dj: int) -> dict[tuple[int, int], int]:
    if not di and not dj:
        return terms
    return {(i + di, j + dj): c for (i, j), c in terms.items()}


def _contract_many(n: int, edges: list[Edge], ids: set[int]) -> tuple[int, list[Edge]]:
    parent = list(range(n))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for eid in ids:
        u, v = edges[eid]
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[rv] = ru
    relabel: dict[int, int] = {}
    for v in range(n):
        r = find(v)
        if r not in relabel:
            relabel[r] = len(relabel)
    out = [(relabel[find(u)], relabel[find(v)]) for eid, (u, v) in enumerate(edges) if eid not in ids]
    return len(relabel), out


def _contract_one(n: int, edges: list[Edge], eid: int) -> tuple[int, list[Edge]]:
    u, v = edges[eid]
    # merge v into u, then move the last vertex into v's slot
    last = n - 1
    out = []
    for k, (a, b) in enumerate(edges):
        if k == eid:
            continue
        if a == v:
            a = u
        if b == v:
            b = u
        if v != last:
            if a == last:
                a = v
            if b == last:
                b = v
        out.append((a, b))
    return n - 1, out


def _delcon(n: int, edges: list[Edge]) -> dict[tuple[int, int], int]:
    loops = sum(1 for u, v in edges if u == v)
    if loops:
        edges = [e for e in edges if e[0] != e[1]]
    if not edges:
        return {(0, loops): 1}
    br = find_bridges(n, edges)
    if br:
        n, edges = _contract_many(n, edges, br)
    if not edges:
        return {(len(br), loops): 1}
    # edges[0] is now neither a loop nor a bridge
    deleted = _delcon(n, edges[1:])
    contracted = _delcon(*_contract_one(n, edges, 0))
    out = dict(deleted)
    for k, c in contracted.items():
        out[k] = out.get(k, 0) + c
    return _shift(out, len(br), loops)


def tutte_delcon(g: Multigraph) -> BiPoly:
    """Tutte polynomial by deletion-contraction.

    Loops and bridges are stripped greedily at every node; the pivot is the
    lowest-id remaining edge.
    """
    return BiPoly(_delcon(g.n, list(g.edges)))


# ---------------------------------------------------------------------------
# rank-nullity subset sum


def _check_cap(g: Multigraph, cap: int | None, what: str) -> None:
    cap = DEFAULT_SUBSET_CAP if cap is None else cap
    if g.m > cap:
        raise CapExceededError(f"{what}: {g.m} edges exceeds cap of {cap}")


def subset_histogram(g: Multigraph) -> dict[tuple[int, int], int]:
    """Count spanning subgraphs by (components, edge count)."""
    n, edges = g.n, g.edges
    m = len(edges)
    parent = list(range(n))
    size = [1] * n
    hist: dict[tuple[int, int], int] = {}

    def find(a):
        while parent[a] != a:
            a = parent[a]
        return a

    # include/exclude recursion over a rollback union-find (no path compression)
    def rec(k: int, comps: int, chosen: int):
        if k == m:
            key = (comps, chosen)
            hist[key] = hist.get(key, 0) + 1
            return
        rec(k + 1, comps, chosen)
        u, v = edges[k]
        ru, rv = find(u), find(v)
        if ru == rv:
            rec(k + 1, comps, chosen + 1)
            return
        if size[ru] < size[rv]:
            ru, rv = rv, ru
        parent[rv] = ru
        size[ru] += size[rv]
        rec(k + 1, comps - 1, chosen + 1)
        size[ru] -= size[rv]
        parent[rv] = rv

    rec(0, n, 0)
    return hist


def tutte_subset(g: Multigraph, cap: int | None = None) -> BiPoly:
    """Sum of (x-1)^(rho(E)-rho(A)) (y-1)^gamma(A) over all A subset of E."""
    _check_cap(g, cap, "subset expansion")
    hist = subset_histogram(g)
    c_full = min(c for c, _ in hist) if hist else g.n
    xm1 = BiPoly({(1, 0): 1, (0, 0): -1})
    ym1 = BiPoly({(0, 1): 1, (0, 0): -1})
    total = BiPoly()
    for (c, size), count in hist.items():
        total = total + (xm1 ** (c - c_full)) * (ym1 ** (size - g.n + c)) * count
    return total


# ---------------------------------------------------------------------------
# convolution


def _component_labels(n: int, edges) -> list[int]:
    parent = list(range(n))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for u, v in edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[rv] = ru
    return [find(v) for v in range(n)]


def tutte_convolution(g: Multigraph, cap: int | None = None, prune: bool = True) -> BiPoly:
    """Sum over A of T(G/A; x, 0) * T(G|A; 0, y).

    With ``prune`` the terms known to vanish are skipped: G/A has a loop exactly
    when some edge outside A joins two vertices already connected by A, and
    T(.; x, 0) is zero on graphs with loops; T(.; 0, y) is zero when G|A has a
    bridge.
    """
    _check_cap(g, cap, "convolution")
    n, edges = g.n, list(g.edges)
    m = len(edges)
    total: dict[tuple[int, int], int] = {}
    for mask in range(1 << m):
        inside = [edges[k] for k in range(m) if mask >> k & 1]
        outside_ids = [k for k in range(m) if not mask >> k & 1]
        labels = _component_labels(n, inside)
        if prune:
            if any(labels[edges[k][0]] == labels[edges[k][1]] for k in outside_ids):
                continue
            if find_bridges(n, inside):
                continue
        # G/A: vertices are the components of (V, A); edges are E - A
        relabel: dict[int, int] = {}
        for r in labels:
            if r not in relabel:
                relabel[r] = len(relabel)
        quotient = [(relabel[labels[edges[k][0]]], relabel[labels[edges[k][1]]]) for k in outside_ids]
        left = {(i, 0): c for (i, j), c in _delcon(len(relabel), quotient).items() if j == 0}
        if not left:
            continue
        right = {(0, j): c for (i, j), c in _delcon(n, inside).items() if i == 0}
        for (i, _), c1 in left.items():
            for (_, j), c2 in right.items():
                total[(i, j)] = total.get((i, j), 0) + c1 * c2
    return BiPoly(total)


# ---------------------------------------------------------------------------


def compute(g: Multigraph, method: Method = "delcon", cap: int | None = None) -> TutteResult:
    start = time.perf_counter()
    if method == "delcon":
        poly = tutte_delcon(g)
    elif method == "subset":
        poly = tutte_subset(g, cap)
    elif method == "convolution":
        poly = tutte_convolution(g, cap)
    else:
        raise ValueError(f"unknown method {method!r}")
    return TutteResult(poly, method, time.perf_counter() - start)


EXTREME_LABELS = (
    "t[0,m-n+1]",
    "t[0,m-n]",
    "t[0,m-n-1]",
    "t[1,m-n]",
    "t[1,m-n-1]",
    "t[n-1,0]",
    "t[n-2,0]",
    "t[n-3,0]",
    "t[n-2,1]",
    "t[n-3,1]",
)


def extreme_positions(n: int, m: int) -> dict[str, tuple[int, int] | None]:
    """The ten target positions; ``None`` where an index would be negative."""
    raw = [
        (0, m - n + 1),
        (0, m - n),
        (0, m - n - 1),
        (1, m - n),
        (1, m - n - 1),
        (n - 1, 0),
        (n - 2, 0),
        (n - 3, 0),
        (n - 2, 1),
        (n - 3, 1),
    ]
    return {label: (pos if min(pos) >= 0 else None) for label, pos in zip(EXTREME_LABELS, raw)}


def extreme_window(g: Multigraph, poly: BiPoly | None = None) -> dict[str, int | None]:
    """Coefficients of T(G) at the ten extreme positions, read from deletion-contraction."""
    require_connected_bridgeless_loopless(g)
    if poly is None:
        poly = tutte_delcon(g)
    return {
        label: (None if pos is None else poly.coefficient(*pos))
        for label, pos in extreme_positions(g.n, g.m).items()
    }
