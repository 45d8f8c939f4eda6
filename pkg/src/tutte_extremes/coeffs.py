"""Closed forms for ten extreme Tutte coefficients and their comparison with the oracle.

For a connected, bridgeless, loopless graph with n vertices and m edges the
coefficients t[i,j] at the top of the y-range are governed by series classes
and Theta classes, and those at the top of the x-range by parallel classes and
triangles of the simplified graph.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Multigraph, contract, delete, require_connected_bridgeless_loopless
from .poly import BiPoly
from .structure import (
    parallel_classes,
    series_classes,
    simple_triangle_count,
    special_classes,
)
from .tutte import EXTREME_LABELS, extreme_positions, extreme_window, tutte_delcon


def choose2(k: int) -> int:
    """k(k-1)/2, extended polynomially to all integers."""
    return k * (k - 1) // 2


def thm1_coeffs(g: Multigraph) -> dict[str, int | None]:
    """Coefficients t[0,m-n+1], t[0,m-n], t[0,m-n-1], t[1,m-n], t[1,m-n-1] from series data."""
    require_connected_bridgeless_loopless(g)
    n, m = g.n, g.m
    ser = series_classes(g)
    s, s_star = ser.count, ser.nontrivial_count
    theta = sum(1 for c in special_classes(g) if c.is_theta)
    # s(G - A) over nontrivial series classes A; G - A keeps its isolated vertices
    sum_s = sum(series_classes(delete(g, block).graph).count for block in ser.nontrivial)
    values = [
        1,
        n + s - m - 1,
        choose2(m - n + 1) - (m - n) * s + choose2(s) - theta,
        s_star,
        -s_star * (m - n) + sum_s + theta,
    ]
    positions = extreme_positions(n, m)
    return {
        label: (v if positions[label] is not None else None) for label, v in zip(EXTREME_LABELS[:5], values)
    }


def thm2_coeffs(g: Multigraph) -> dict[str, int | None]:
    """Coefficients t[n-1,0], t[n-2,0], t[n-3,0], t[n-2,1], t[n-3,1] from parallel data."""
    require_connected_bridgeless_loopless(g)
    n = g.n
    par = parallel_classes(g)
    p, p_star = par.count, par.nontrivial_count
    tri = simple_triangle_count(g)
    sum_p = sum(parallel_classes(contract(g, block).graph).count for block in par.nontrivial)
    values = [
        1,
        p - n + 1,
        choose2(n - 1) - (n - 2) * p + choose2(p) - tri,
        p_star,
        -p_star * (n - 2) + sum_p + tri,
    ]
    positions = extreme_positions(n, g.m)
    return {
        label: (v if positions[label] is not None else None) for label, v in zip(EXTREME_LABELS[5:], values)
    }


@dataclass(frozen=True)
class CoeffEntry:
    label: str
    position: tuple[int, int] | None
    formula: int | None
    oracle: int | None

    @property
    def applicable(self) -> bool:
        return self.position is not None

    @property
    def match(self) -> bool:
        return not self.applicable or self.formula == self.oracle

    def to_json(self) -> dict:
        return {
            "label": self.label,
            "position": list(self.position) if self.position else None,
            "formula": self.formula,
            "oracle": self.oracle,
            "match": self.match,
        }


@dataclass(frozen=True)
class CoeffReport:
    n: int
    m: int
    entries: tuple[CoeffEntry, ...]

    @property
    def ok(self) -> bool:
        return all(e.match for e in self.entries)

    def mismatches(self) -> list[CoeffEntry]:
        return [e for e in self.entries if not e.match]

    def __getitem__(self, label: str) -> CoeffEntry:
        for e in self.entries:
            if e.label == label:
                return e
        raise KeyError(label)

    def to_json(self) -> list[dict]:
        return [e.to_json() for e in self.entries]


def verify_extremes(g: Multigraph, poly: BiPoly | None = None) -> CoeffReport:
    """Compare both five-coefficient closed forms with coefficients of T(G)."""
    require_connected_bridgeless_loopless(g)
    if poly is None:
        poly = tutte_delcon(g)
    oracle = extreme_window(g, poly)
    formula = {**thm1_coeffs(g), **thm2_coeffs(g)}
    positions = extreme_positions(g.n, g.m)
    entries = tuple(CoeffEntry(label, positions[label], formula[label], oracle[label]) for label in EXTREME_LABELS)
    return CoeffReport(g.n, g.m, entries)
