"""Test corpora of connected, bridgeless, loopless multigraphs.

Exhaustive mode lists every such multigraph up to isomorphism within the
bounds (edge multiplicity at most 3), ordered by (n, m).  Random mode builds
seeded samples from an ear decomposition plus random chords and doublings.
"""

from __future__ import annotations

import random
from itertools import combinations, permutations, product
from typing import Iterator, Literal

from .graph import Multigraph, count_components, find_bridges

MAX_MULTIPLICITY = 3


def canonical_form(g: Multigraph) -> tuple[tuple[int, int], ...]:
    """Lexicographically least sorted edge list over all vertex relabelings."""
    best = None
    for perm in permutations(range(g.n)):
        form = tuple(sorted((min(perm[u], perm[v]), max(perm[u], perm[v])) for u, v in g.edges))
        if best is None or form < best:
            best = form
    return best


def _connected_supports(n: int, max_edges: int) -> list[tuple[tuple[int, int], ...]]:
    """Connected simple graphs on n vertices up to isomorphism, as canonical edge tuples."""
    pairs = list(combinations(range(n), 2))
    perms = list(permutations(range(n)))
    seen: set = set()
    out = []
    for k in range(n - 1, min(len(pairs), max_edges) + 1):
        for chosen in combinations(pairs, k):
            if count_components(n, chosen) != 1:
                continue
            form = min(tuple(sorted((min(p[u], p[v]), max(p[u], p[v])) for u, v in chosen)) for p in perms)
            if form not in seen:
                seen.add(form)
                out.append(form)
    return out


def _automorphisms(n: int, support: tuple[tuple[int, int], ...]) -> list[tuple[int, ...]]:
    edge_set = set(support)
    return [
        p
        for p in permutations(range(n))
        if all((min(p[u], p[v]), max(p[u], p[v])) in edge_set for u, v in support)
    ]


def exhaustive(max_n: int, max_m: int, max_mult: int = MAX_MULTIPLICITY) -> list[Multigraph]:
    """All connected bridgeless loopless multigraphs with 2 <= n <= max_n, m <= max_m."""
    found: list[tuple[int, int, tuple, Multigraph]] = []
    for n in range(2, max_n + 1):
        for support in _connected_supports(n, max_m):
            autos = _automorphisms(n, support)
            index = {e: k for k, e in enumerate(support)}
            seen: set = set()
            for mult in product(range(1, max_mult + 1), repeat=len(support)):
                if sum(mult) > max_m:
                    continue
                # permuting an assignment by an automorphism gives an isomorphic multigraph
                key = min(
                    tuple(mult[index[(min(p[u], p[v]), max(p[u], p[v]))]] for u, v in support) for p in autos
                )
                if key in seen:
                    continue
                seen.add(key)
                edges = tuple(e for e, k in zip(support, key) for _ in range(k))
                if find_bridges(n, edges):
                    continue
                found.append((n, len(edges), edges, Multigraph(n, edges)))
    found.sort(key=lambda t: (t[0], t[1], t[2]))
    return [g for *_, g in found]


def random_graph(rng: random.Random, max_n: int, max_m: int) -> Multigraph:
    """One connected bridgeless loopless multigraph with n <= max_n, m <= max_m."""
    while True:
        n = rng.randint(2, max(2, min(max_n, max_m)))
        order = list(range(n))
        rng.shuffle(order)
        # initial cycle through the first k vertices (k = 2 is a doubled edge)
        k = rng.randint(2, n)
        edges = [(order[i], order[(i + 1) % k]) for i in range(k)]
        placed = order[:k]
        rest = order[k:]
        # ears: a path of fresh vertices between two placed vertices
        while rest:
            length = rng.randint(1, len(rest))
            fresh, rest = rest[:length], rest[length:]
            a, b = rng.choice(placed), rng.choice(placed)
            chain = [a, *fresh, b]
            edges.extend(zip(chain, chain[1:]))
            placed.extend(fresh)
        if len(edges) > max_m:
            continue
        target = rng.randint(len(edges), max_m)
        while len(edges) < target:
            if rng.random() < 0.4 and edges:
                edges.append(rng.choice(edges))
            else:
                u, v = rng.sample(range(n), 2)
                edges.append((u, v))
        for _ in range(max_m):
            br = find_bridges(n, edges)
            if not br:
                break
            edges.append(edges[min(br)])
        if len(edges) <= max_m and not find_bridges(n, edges):
            return Multigraph(n, tuple(edges))


def random_corpus(count: int, max_n: int, max_m: int, seed: int) -> list[Multigraph]:
    rng = random.Random(seed)
    return [random_graph(rng, max_n, max_m) for _ in range(count)]


def generate_corpus(
    max_n: int,
    max_m: int,
    mode: Literal["exhaustive", "random"] = "exhaustive",
    seed: int = 0,
    count: int = 100,
) -> Iterator[Multigraph]:
    if max_n < 2:
        raise ValueError("max_n must be at least 2")
    if mode == "exhaustive":
        yield from exhaustive(max_n, max_m)
    elif mode == "random":
        yield from random_corpus(count, max_n, max_m, seed)
    else:
        raise ValueError(f"unknown corpus mode {mode!r}")
