"""Chromatic, flow and Jones polynomials obtained from T(G), their leading
coefficients in closed form, and oracles that do not go through T(G).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product

from .errors import CapExceededError, PreconditionError
from .graph import (
    Multigraph,
    count_components,
    require_connected_bridgeless_loopless,
    stats,
)
from .lattice import bond_lattice, bridgeless_lattice, nullity_of_mask
from .poly import BiPoly, UniPoly, substitute_affine, substitute_laurent_t
from .structure import (
    parallel_classes,
    series_classes,
    simple_triangle_count,
    simplify,
    special_classes,
)
from .tutte import tutte_delcon


def _choose2(k: int) -> int:
    return k * (k - 1) // 2


def chromatic(g: Multigraph, poly: BiPoly | None = None) -> UniPoly:
    """P(G; lam) = (-1)^rho(E) lam^c T(G; 1 - lam, 0)."""
    st = stats(g)
    poly = tutte_delcon(g) if poly is None else poly
    at = substitute_affine(poly, -1, 1, 0, 0)
    sign = -1 if st.rho % 2 else 1
    return at * UniPoly({st.c: sign})


def flow(g: Multigraph, poly: BiPoly | None = None) -> UniPoly:
    """F(G; lam) = (-1)^gamma(E) T(G; 0, 1 - lam)."""
    st = stats(g)
    poly = tutte_delcon(g) if poly is None else poly
    at = substitute_affine(poly, 0, 0, -1, 1)
    return at * (-1 if st.gamma % 2 else 1)


def chromatic_via_rota(g: Multigraph, cap: int | None = None) -> UniPoly:
    """Sum over bonds H of the simplified graph of mu(E_n, H) lam^c(H)."""
    if g.has_loop():
        raise PreconditionError("lattice form of the chromatic polynomial needs a loopless graph")
    lat = bond_lattice(simplify(g)[0], cap)
    out: dict[int, int] = {}
    for elem, mu in zip(lat.elements, lat.mobius):
        out[len(elem)] = out.get(len(elem), 0) + mu
    return UniPoly(out)


def flow_via_mobius(g: Multigraph, cap: int | None = None) -> UniPoly:
    """Sum over bridgeless spanning subgraphs H of mu(G, H) lam^gamma(H)."""
    lat = bridgeless_lattice(g, cap)
    out: dict[int, int] = {}
    for mask, mu in zip(lat.elements, lat.mobius):
        k = nullity_of_mask(g, mask)
        out[k] = out.get(k, 0) + mu
    return UniPoly(out)


# ---------------------------------------------------------------------------
# brute-force counts


def count_colorings(g: Multigraph, colors: int, cap: int = 8) -> int:
    """Proper colorings by enumerating all colors^n assignments."""
    if g.n > cap:
        raise CapExceededError(f"coloring enumeration: {g.n} vertices exceeds cap of {cap}")
    return sum(1 for col in product(range(colors), repeat=g.n) if all(col[u] != col[v] for u, v in g.edges))


def count_nowhere_zero_flows(g: Multigraph, order: int, cap: int = 12) -> int:
    """Nowhere-zero Z_order flows, edges oriented from lower to higher endpoint.

    Loops satisfy conservation for any value, so each contributes a factor order - 1.
    """
    if g.m > cap:
        raise CapExceededError(f"flow enumeration: {g.m} edges exceeds cap of {cap}")
    proper = [(u, v) if u < v else (v, u) for u, v in g.edges if u != v]
    loops = g.m - len(proper)
    count = 0
    for vals in product(range(1, order), repeat=len(proper)):
        net = [0] * g.n
        for (u, v), val in zip(proper, vals):
            net[u] -= val
            net[v] += val
        if all(x % order == 0 for x in net):
            count += 1
    return count * (order - 1) ** loops


def count_spanning_trees(g: Multigraph) -> int:
    """Spanning trees of a connected graph by scanning (n-1)-edge subsets."""
    if g.n == 0:
        return 0
    return sum(
        1
        for ids in combinations(range(g.m), g.n - 1)
        if count_components(g.n, [g.edges[e] for e in ids]) == 1
    )


# ---------------------------------------------------------------------------
# leading coefficients


@dataclass(frozen=True)
class TopCoeffs:
    """Closed-form versus actual values of three leading coefficients."""

    name: str
    formula: tuple[int, int, int]
    actual: tuple[int, int, int]

    @property
    def match(self) -> bool:
        return self.formula == self.actual

    def to_json(self) -> list[dict]:
        return [
            {"position": k, "formula": f, "oracle": a, "match": f == a}
            for k, (f, a) in enumerate(zip(self.formula, self.actual))
        ]


def chromatic_top3(g: Multigraph, poly: BiPoly | None = None) -> TopCoeffs:
    """(1, -p, C(p,2) - triangles) against the lam^n, lam^(n-1), lam^(n-2) coefficients."""
    require_connected_bridgeless_loopless(g)
    p = parallel_classes(g).count
    tri = simple_triangle_count(g)
    chrom = chromatic(g, poly)
    n = g.n
    actual = tuple(chrom.coefficient(n - k) if n - k >= 0 else 0 for k in range(3))
    return TopCoeffs("chromatic", (1, -p, _choose2(p) - tri), actual)


def flow_top3(g: Multigraph, poly: BiPoly | None = None) -> TopCoeffs:
    """(1, -s, C(s,2) - Theta) against the three highest coefficients of F."""
    require_connected_bridgeless_loopless(g)
    s = series_classes(g).count
    theta = sum(1 for c in special_classes(g) if c.is_theta)
    fl = flow(g, poly)
    top = g.m - g.n + 1
    actual = tuple(fl.coefficient(top - k) if top - k >= 0 else 0 for k in range(3))
    return TopCoeffs("flow", (1, -s, _choose2(s) - theta), actual)


# ---------------------------------------------------------------------------
# Jones polynomial


@dataclass(frozen=True)
class JonesReport:
    poly: UniPoly
    b: tuple[int, ...]
    formulas: dict[str, tuple[int, int]]  # label -> (index into b, closed-form value)

    def entries(self) -> list[dict]:
        out = []
        for label, (idx, value) in self.formulas.items():
            actual = self.b[idx] if 0 <= idx < len(self.b) else 0
            out.append({"label": label, "index": idx, "formula": value, "oracle": actual, "match": value == actual})
        return out

    @property
    def formulas_match(self) -> bool:
        return all(e["match"] for e in self.entries())

    @property
    def signs_ok(self) -> bool:
        m = len(self.b) - 1
        return all((-1) ** (m - i) * bi >= 0 for i, bi in enumerate(self.b))

    @property
    def ok(self) -> bool:
        return self.formulas_match and self.signs_ok

    def to_json(self) -> dict:
        return {
            "poly": self.poly.to_json(),
            "b": [str(x) for x in self.b],
            "checks": self.entries(),
            "sign_condition": self.signs_ok,
        }


def jones_poly(g: Multigraph, poly: BiPoly | None = None) -> UniPoly:
    """J_G(t) = (-1)^(n-1) t^(m-n+1) T(G; -t, -1/t)."""
    poly = tutte_delcon(g) if poly is None else poly
    sign = -1 if (g.n - 1) % 2 else 1
    return substitute_laurent_t(poly, sign, g.m - g.n + 1)


def jones(g: Multigraph, poly: BiPoly | None = None) -> JonesReport:
    require_connected_bridgeless_loopless(g)
    n, m = g.n, g.m
    J = jones_poly(g, poly)
    if J.degree() > m:
        raise AssertionError(f"Jones polynomial has degree {J.degree()} > m = {m}")
    b = tuple(J.coefficient(i) for i in range(m + 1))
    ser = series_classes(g)
    s, s_star = ser.count, ser.nontrivial_count
    par = parallel_classes(g)
    p, p_star = par.count, par.nontrivial_count
    theta = sum(1 for c in special_classes(g) if c.is_theta)
    tri = simple_triangle_count(g)
    sgn = -1 if m % 2 else 1
    formulas = {
        "b[0]": (0, sgn),
        "b[1]": (1, sgn * (m - n + 1 - s)),
        "b[2]": (2, sgn * (_choose2(s - m + n) + s_star - theta)),
        "b[m-2]": (m - 2, _choose2(p - n + 2) + p_star - tri),
        "b[m-1]": (m - 1, n - 1 - p),
        "b[m]": (m, 1),
    }
    return JonesReport(J, b, formulas)
