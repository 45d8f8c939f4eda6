"""Run every applicable identity on one graph and collect pass/fail lines."""

from __future__ import annotations

from dataclasses import dataclass, field

from .coeffs import choose2, verify_extremes
from .graph import Multigraph, is_bridgeless, is_connected
from .lattice import DEFAULT_BOND_CAP, DEFAULT_BRIDGELESS_CAP
from .planar import PlaneGraph, dual, duality_report
from .special import (
    chromatic,
    chromatic_top3,
    chromatic_via_rota,
    count_colorings,
    count_nowhere_zero_flows,
    count_spanning_trees,
    flow,
    flow_top3,
    flow_via_mobius,
    jones,
)
from .structure import series_classes, special_classes, special_classes_bruteforce
from .tutte import DEFAULT_SUBSET_CAP, tutte_convolution, tutte_delcon, tutte_subset


@dataclass
class Caps:
    subset: int = DEFAULT_SUBSET_CAP
    convolution: int = 16
    special_bruteforce: int = 14
    bond_vertices: int = DEFAULT_BOND_CAP
    bridgeless_edges: int = DEFAULT_BRIDGELESS_CAP
    coloring_vertices: int = 6
    flow_edges: int = 10


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str = ""

    def to_json(self) -> dict:
        return {"check": self.name, "passed": self.passed, "detail": self.detail}


@dataclass
class VerifyReport:
    n: int
    m: int
    checks: list[Check] = field(default_factory=list)
    skipped: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, name: str, passed: bool, detail: str = "") -> None:
        self.checks.append(Check(name, bool(passed), detail))

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "ok": self.ok,
            "checks": [c.to_json() for c in self.checks],
            "skipped": self.skipped,
        }


def verify(g: Multigraph, caps: Caps | None = None, plane: PlaneGraph | None = None) -> VerifyReport:
    caps = caps or Caps()
    rep = VerifyReport(g.n, g.m)
    T = tutte_delcon(g)

    if g.m <= caps.subset:
        S = tutte_subset(g, caps.subset)
        rep.add("tutte: delcon = subset", S == T, f"subset={S}" if S != T else "")
    else:
        rep.skipped.append("tutte subset (cap)")
    if g.m <= caps.convolution:
        C = tutte_convolution(g, caps.convolution)
        rep.add("tutte: delcon = convolution", C == T, f"convolution={C}" if C != T else "")
    else:
        rep.skipped.append("tutte convolution (cap)")

    rep.add("T(2,2) = 2^m", T(2, 2) == 2**g.m)
    rep.add("coefficients nonnegative", all(c >= 0 for _, c in T.items()))
    if is_connected(g):
        trees = count_spanning_trees(g)
        rep.add("T(1,1) = spanning trees", T(1, 1) == trees, f"T(1,1)={T(1, 1)} trees={trees}")
    if g.m > 1:
        rep.add("beta: t[0,1] = t[1,0]", T.coefficient(0, 1) == T.coefficient(1, 0))

    chrom, fl = chromatic(g, T), flow(g, T)
    if g.n <= caps.coloring_vertices:
        rep.add(
            "chromatic = coloring count (lam<=3)",
            all(chrom(k) == count_colorings(g, k, cap=caps.coloring_vertices) for k in (1, 2, 3)),
        )
    if g.m <= caps.flow_edges:
        rep.add(
            "flow = nowhere-zero count (lam<=3)",
            all(fl(k) == count_nowhere_zero_flows(g, k, cap=caps.flow_edges) for k in (1, 2, 3)),
        )
    if not g.has_loop() and g.n <= caps.bond_vertices:
        rep.add("chromatic = bond-lattice sum", chromatic_via_rota(g, caps.bond_vertices) == chrom)
    if is_bridgeless(g) and g.m <= caps.bridgeless_edges:
        rep.add("flow = bridgeless-lattice sum", flow_via_mobius(g, caps.bridgeless_edges) == fl)

    hypotheses = g.n >= 2 and is_connected(g) and not g.has_loop() and is_bridgeless(g)
    if not hypotheses:
        rep.skipped.append("extreme-coefficient checks (graph not connected, bridgeless and loopless)")
        return rep

    report = verify_extremes(g, T)
    for e in report.entries:
        if e.applicable:
            rep.add(f"extreme {e.label}", e.match, f"formula={e.formula} oracle={e.oracle}")

    ser = series_classes(g)
    classes = special_classes(g)
    theta = sum(1 for c in classes if c.is_theta)
    infinity = len(classes) - theta
    rep.add(
        "Infinity = C(s,2) - 3 Theta",
        infinity == choose2(ser.count) - 3 * theta,
        f"s={ser.count} Theta={theta} Infinity={infinity}",
    )
    if g.m <= caps.special_bruteforce:
        rep.add("closure-join = brute-force classes", special_classes_bruteforce(g, caps.special_bruteforce) == classes)

    top_c, top_f = chromatic_top3(g, T), flow_top3(g, T)
    rep.add("chromatic top-3 coefficients", top_c.match, f"formula={top_c.formula} actual={top_c.actual}")
    rep.add("flow top-3 coefficients", top_f.match, f"formula={top_f.formula} actual={top_f.actual}")

    jr = jones(g, T)
    for entry in jr.entries():
        rep.add(f"jones {entry['label']}", entry["match"], f"formula={entry['formula']} oracle={entry['oracle']}")
    rep.add("jones sign pattern", jr.signs_ok)

    if plane is not None:
        dr = duality_report(plane)
        for c in dr.checks:
            rep.add(f"dual: {c.name}", c.holds, f"{c.lhs} vs {c.rhs}")
        dd = dual(dual(plane))
        rep.add("dual(dual) keeps T", tutte_delcon(dd.g) == T)
    return rep
