"""Finite graded posets with explicit order matrices and Moebius values.

Two lattices are built from a graph: the bond lattice (vertex partitions whose
blocks induce connected subgraphs, ordered by refinement) and the lattice of
bridgeless spanning subgraphs (ordered by reverse edge inclusion).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Hashable, Sequence

from .errors import CapExceededError, PreconditionError
from .graph import Multigraph, count_components, find_bridges
from .structure import simplify

DEFAULT_BOND_CAP = 7  # vertices
DEFAULT_BRIDGELESS_CAP = 10  # edges


@dataclass(frozen=True)
class Lattice:
    elements: tuple[Hashable, ...]
    leq: tuple[tuple[bool, ...], ...]
    rank: tuple[int, ...]
    bottom: int
    top: int
    mobius: tuple[int, ...]

    def __len__(self):
        return len(self.elements)

    def index(self, element) -> int:
        return self.elements.index(element)

    def mobius_sums_vanish(self) -> bool:
        """sum over y <= x of mu(bottom, y) is 0 for every x above the bottom."""
        for x in range(len(self)):
            if x == self.bottom:
                continue
            if sum(self.mobius[y] for y in range(len(self)) if self.leq[y][x]) != 0:
                return False
        return self.mobius[self.bottom] == 1

    def is_partial_order(self) -> bool:
        n = len(self)
        le = self.leq
        for a in range(n):
            if not le[a][a]:
                return False
            for b in range(n):
                if a != b and le[a][b] and le[b][a]:
                    return False
                if le[a][b]:
                    for c in range(n):
                        if le[b][c] and not le[a][c]:
                            return False
        return True

    def covers(self) -> list[tuple[int, int]]:
        n = len(self)
        le = self.leq
        out = []
        for a in range(n):
            for b in range(n):
                if a == b or not le[a][b]:
                    continue
                if not any(z != a and z != b and le[a][z] and le[z][b] for z in range(n)):
                    out.append((a, b))
        return out

    def rank_respects_covers(self) -> bool:
        return all(self.rank[b] == self.rank[a] + 1 for a, b in self.covers())


def build_lattice(
    elements: Sequence[Hashable],
    leq: Callable[[Hashable, Hashable], bool],
    rank: Callable[[Hashable], int],
) -> Lattice:
    """Precompute the order matrix and mu(bottom, x) by the standard recursion."""
    elements = tuple(elements)
    n = len(elements)
    matrix = tuple(tuple(leq(a, b) for b in elements) for a in elements)
    bottoms = [i for i in range(n) if all(matrix[i][j] for j in range(n))]
    tops = [i for i in range(n) if all(matrix[j][i] for j in range(n))]
    if len(bottoms) != 1 or len(tops) != 1:
        raise ValueError("poset needs a unique bottom and top")
    ranks = tuple(rank(e) for e in elements)
    order = sorted(range(n), key=lambda i: ranks[i])
    mu = [0] * n
    for x in order:
        if x == bottoms[0]:
            mu[x] = 1
        else:
            mu[x] = -sum(mu[y] for y in range(n) if y != x and matrix[y][x])
    return Lattice(elements, matrix, ranks, bottoms[0], tops[0], tuple(mu))


# ---------------------------------------------------------------------------
# bond lattice


def _set_partitions(items: list[int]):
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in _set_partitions(rest):
        yield [[first]] + part
        for k in range(len(part)):
            yield part[:k] + [[first] + part[k]] + part[k + 1 :]


def _induces_connected(g: Multigraph, block: list[int]) -> bool:
    if len(block) == 1:
        return True
    index = {v: k for k, v in enumerate(block)}
    inner = [(index[u], index[v]) for u, v in g.edges if u in index and v in index]
    return count_components(len(block), inner) == 1


def bond_lattice(g: Multigraph, cap: int | None = None) -> Lattice:
    """Partitions of V into blocks inducing connected subgraphs, ordered by refinement.

    Elements are frozensets of frozenset blocks; rank is n - (number of blocks).
    """
    cap = DEFAULT_BOND_CAP if cap is None else cap
    if g.n > cap:
        raise CapExceededError(f"bond lattice: {g.n} vertices exceeds cap of {cap}")
    bonds = []
    for part in _set_partitions(list(range(g.n))):
        if all(_induces_connected(g, b) for b in part):
            bonds.append(frozenset(frozenset(b) for b in part))

    def finer(a, b):
        return all(any(blk <= other for other in b) for blk in a)

    return build_lattice(bonds, finer, lambda h: g.n - len(h))


# ---------------------------------------------------------------------------
# bridgeless spanning subgraphs


def bridgeless_lattice(g: Multigraph, cap: int | None = None) -> Lattice:
    """Bridgeless spanning subgraphs, H1 <= H2 iff E(H1) contains E(H2).

    Elements are edge bitmasks; the bottom is G itself and rank is
    nullity(G) - nullity(H).
    """
    cap = DEFAULT_BRIDGELESS_CAP if cap is None else cap
    if g.m > cap:
        raise CapExceededError(f"bridgeless lattice: {g.m} edges exceeds cap of {cap}")
    if find_bridges(g.n, g.edges):
        raise PreconditionError("graph must be bridgeless")
    m = g.m
    masks = []
    gammas = {}
    for mask in range(1 << m):
        sub = [g.edges[e] for e in range(m) if mask >> e & 1]
        if not find_bridges(g.n, sub):
            masks.append(mask)
            gammas[mask] = len(sub) - g.n + count_components(g.n, sub)
    full = (1 << m) - 1
    return build_lattice(masks, lambda a, b: a & b == b, lambda h: gammas[full] - gammas[h])


def nullity_of_mask(g: Multigraph, mask: int) -> int:
    sub = [g.edges[e] for e in range(g.m) if mask >> e & 1]
    return len(sub) - g.n + count_components(g.n, sub)


def simplified_bond_lattice(g: Multigraph, cap: int | None = None) -> Lattice:
    return bond_lattice(simplify(g)[0], cap)
