"""Plane multigraphs given by rotation systems: faces, geometric duals and
the duality checks between a plane graph and its dual.

A half-edge (dart) is ``(edge id, end)`` with ``end`` 0 for the first listed
endpoint and 1 for the second.  ``rotation[v]`` lists the darts at ``v`` in
counterclockwise order; a loop contributes both of its darts to one vertex.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import PreconditionError
from .graph import (
    Multigraph,
    Rotation,
    is_connected,
    require_connected_bridgeless_loopless,
)
from .poly import BiPoly
from .structure import (
    parallel_classes,
    series_classes,
    simple_triangle_count,
    special_classes,
)
from .tutte import tutte_delcon

Dart = tuple[int, int]


@dataclass(frozen=True)
class PlaneGraph:
    g: Multigraph
    rotation: dict[int, tuple[Dart, ...]] = field(default_factory=dict)

    def __post_init__(self):
        rot = {v: tuple(tuple(d) for d in self.rotation.get(v, ())) for v in range(self.g.n)}
        extra = set(self.rotation) - set(range(self.g.n))
        if extra:
            raise PreconditionError(f"rotation given for unknown vertices {sorted(extra)}")
        seen: set[Dart] = set()
        for v, darts in rot.items():
            for eid, end in darts:
                if not (0 <= eid < self.g.m) or end not in (0, 1):
                    raise PreconditionError(f"bad half-edge ({eid}, {end}) at vertex {v}")
                if self.g.edges[eid][end] != v:
                    raise PreconditionError(f"half-edge ({eid}, {end}) is not incident to vertex {v}")
                if (eid, end) in seen:
                    raise PreconditionError(f"half-edge ({eid}, {end}) listed twice")
                seen.add((eid, end))
        if len(seen) != 2 * self.g.m:
            missing = sorted({(e, k) for e in range(self.g.m) for k in (0, 1)} - seen)
            raise PreconditionError(f"rotation system misses half-edges {missing}")
        object.__setattr__(self, "rotation", rot)

    @property
    def n(self) -> int:
        return self.g.n

    @property
    def m(self) -> int:
        return self.g.m

    def successor(self) -> dict[Dart, Dart]:
        succ: dict[Dart, Dart] = {}
        for darts in self.rotation.values():
            k = len(darts)
            for i, d in enumerate(darts):
                succ[d] = darts[(i + 1) % k]
        return succ

    def as_rotation(self) -> Rotation:
        return {v: list(d) for v, d in self.rotation.items()}


def faces(pg: PlaneGraph) -> list[list[Dart]]:
    """Face boundary walks as lists of darts.

    After traversing dart (e, k) into the far end of e, the walk continues with
    the rotation successor of the twin dart (e, 1 - k).  Raises when the
    rotation system is not a sphere embedding (Euler characteristic != 2).
    """
    if not is_connected(pg.g):
        raise PreconditionError("face tracing needs a connected graph")
    if pg.m == 0:
        return [[]]
    succ = pg.successor()
    seen: set[Dart] = set()
    walks = []
    for v in range(pg.n):
        for start in pg.rotation[v]:
            if start in seen:
                continue
            walk = []
            d = start
            while d not in seen:
                seen.add(d)
                walk.append(d)
                eid, end = d
                d = succ[(eid, 1 - end)]
            walks.append(walk)
    f = len(walks)
    if pg.n - pg.m + f != 2:
        raise PreconditionError(f"rotation system is not planar: n - m + f = {pg.n - pg.m + f}, expected 2")
    return walks


def dual(pg: PlaneGraph) -> PlaneGraph:
    """Geometric dual; dual vertex k is the k-th face found, dual edge e crosses primal edge e."""
    walks = faces(pg)
    face_of: dict[Dart, int] = {}
    for k, walk in enumerate(walks):
        for d in walk:
            face_of[d] = k
    edges = tuple((face_of[(e, 0)], face_of[(e, 1)]) for e in range(pg.m))
    rotation = {k: tuple(walk) for k, walk in enumerate(walks)}
    return PlaneGraph(Multigraph(len(walks), edges), rotation)


# ---------------------------------------------------------------------------
# standard embeddings


def from_coordinates(g: Multigraph, coords: list[tuple[float, float]]) -> PlaneGraph:
    """Rotation of a straight-line drawing of a simple graph (darts sorted by angle)."""
    rotation: dict[int, list[tuple[float, Dart]]] = {v: [] for v in range(g.n)}
    for eid, (u, v) in enumerate(g.edges):
        for end, (a, b) in enumerate(((u, v), (v, u))):
            ax, ay = coords[a]
            bx, by = coords[b]
            rotation[a].append((math.atan2(by - ay, bx - ax), (eid, end)))
    return PlaneGraph(g, {v: tuple(d for _, d in sorted(lst)) for v, lst in rotation.items()})


def plane_cycle(k: int) -> PlaneGraph:
    coords = [(math.cos(2 * math.pi * i / k), math.sin(2 * math.pi * i / k)) for i in range(k)]
    if k <= 2:
        return plane_theta_like([1] * k) if k == 2 else PlaneGraph(Multigraph(1, ((0, 0),)), {0: ((0, 0), (0, 1))})
    g = Multigraph(k, tuple((i, (i + 1) % k) for i in range(k)))
    return from_coordinates(g, coords)


def plane_theta_like(lengths: list[int]) -> PlaneGraph:
    """Poles 0 and 1 joined by internally disjoint paths, drawn side by side.

    ``[1] * k`` gives the dipole D_k; three lengths give a Theta graph.
    """
    edges = []
    n = 2
    first_darts = []
    last_darts = []
    rotation: dict[int, list[Dart]] = {}
    for length in lengths:
        prev = 0
        for step in range(length):
            nxt = 1 if step == length - 1 else n
            eid = len(edges)
            edges.append((prev, nxt))
            if step == 0:
                first_darts.append((eid, 0))
            else:
                rotation[prev].append((eid, 0))
            if nxt == 1:
                last_darts.append((eid, 1))
            else:
                rotation[nxt] = [(eid, 1)]
                n += 1
            prev = nxt
    rotation[0] = first_darts
    rotation[1] = list(reversed(last_darts))
    return PlaneGraph(Multigraph(n, tuple(edges)), rotation)


def plane_dipole(k: int) -> PlaneGraph:
    return plane_theta_like([1] * k)


def plane_theta(k1: int, k2: int, k3: int) -> PlaneGraph:
    return plane_theta_like([k1, k2, k3])


def plane_k4() -> PlaneGraph:
    g = Multigraph(4, ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)))
    coords = [(0.0, 0.0), (0.0, 2.0), (-2.0, -1.0), (2.0, -1.0)]
    return from_coordinates(g, coords)


def plane_cube() -> PlaneGraph:
    outer = [(-2.0, -2.0), (2.0, -2.0), (2.0, 2.0), (-2.0, 2.0)]
    inner = [(-1.0, -1.0), (1.0, -1.0), (1.0, 1.0), (-1.0, 1.0)]
    edges = []
    for i in range(4):
        edges.append((i, (i + 1) % 4))
        edges.append((4 + i, 4 + (i + 1) % 4))
        edges.append((i, 4 + i))
    return from_coordinates(Multigraph(8, tuple(edges)), outer + inner)


# ---------------------------------------------------------------------------
# duality report


@dataclass(frozen=True)
class IdentityCheck:
    name: str
    lhs: int | str
    rhs: int | str

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs

    def to_json(self) -> dict:
        return {"identity": self.name, "lhs": self.lhs, "rhs": self.rhs, "holds": self.holds}


@dataclass(frozen=True)
class DualReport:
    dual: PlaneGraph
    tutte: BiPoly
    dual_tutte: BiPoly
    checks: tuple[IdentityCheck, ...]

    @property
    def ok(self) -> bool:
        return all(c.holds for c in self.checks)

    def to_json(self) -> dict:
        return {
            "dual": {"n": self.dual.n, "edges": [list(e) for e in self.dual.g.edges]},
            "tutte": self.tutte.to_json(),
            "dual_tutte": self.dual_tutte.to_json(),
            "checks": [c.to_json() for c in self.checks],
            "ok": self.ok,
        }


def _quantities(g: Multigraph) -> dict[str, int]:
    par = parallel_classes(g)
    ser = series_classes(g)
    theta = sum(1 for c in special_classes(g) if c.is_theta)
    return {
        "n": g.n,
        "m": g.m,
        "p": par.count,
        "p*": par.nontrivial_count,
        "s": ser.count,
        "s*": ser.nontrivial_count,
        "Theta": theta,
        "triangles": simple_triangle_count(g),
    }


def duality_report(pg: PlaneGraph) -> DualReport:
    require_connected_bridgeless_loopless(pg.g)
    d = dual(pg)
    t, td = tutte_delcon(pg.g), tutte_delcon(d.g)
    q, qd = _quantities(pg.g), _quantities(d.g)
    checks = (
        IdentityCheck("T(G*;x,y) = T(G;y,x)", str(td), str(t.swap())),
        IdentityCheck("m(G*) = m(G)", qd["m"], q["m"]),
        IdentityCheck("n(G*) = m - n + 2", qd["n"], q["m"] - q["n"] + 2),
        IdentityCheck("s(G*) = p(G)", qd["s"], q["p"]),
        IdentityCheck("p(G*) = s(G)", qd["p"], q["s"]),
        IdentityCheck("s*(G*) = p*(G)", qd["s*"], q["p*"]),
        IdentityCheck("p*(G*) = s*(G)", qd["p*"], q["s*"]),
        IdentityCheck("Theta(G*) = triangles(G~)", qd["Theta"], q["triangles"]),
        IdentityCheck("triangles(G*~) = Theta(G)", qd["triangles"], q["Theta"]),
    )
    return DualReport(d, t, td, checks)
