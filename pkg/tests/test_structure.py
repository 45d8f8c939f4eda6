from itertools import combinations

import pytest

from tutte_extremes.coeffs import choose2
from tutte_extremes.corpus import exhaustive
from tutte_extremes.errors import CapExceededError, PreconditionError
from tutte_extremes.graph import (
    Infinity,
    Multigraph,
    Theta,
    complete,
    count_components,
    cube,
    cycle,
    dipole,
    find_bridges,
    path,
    theta,
)
from tutte_extremes.structure import (
    parallel_classes,
    series_classes,
    series_relation_is_transitive,
    simplify,
    special_classes,
    special_classes_bruteforce,
    structure_report,
    triangle_count,
)

C3_DOUBLED = Multigraph(3, ((0, 1), (0, 1), (1, 2), (2, 0)))


def sizes(partition):
    return sorted(len(b) for b in partition.blocks)


def series_by_definition(g):
    """Pairwise 2-cut relation closed into blocks; fine for small m."""
    base = count_components(g.n, g.edges)
    block_of = {e: {e} for e in range(g.m)}
    for e, f in combinations(range(g.m), 2):
        rest = [g.edges[k] for k in range(g.m) if k not in (e, f)]
        if count_components(g.n, rest) > base:
            merged = block_of[e] | block_of[f]
            for k in merged:
                block_of[k] = merged
    return sorted(sorted(b) for b in {frozenset(b) for b in block_of.values()})


def test_parallel_examples():
    par = parallel_classes(dipole(3))
    assert (par.count, par.nontrivial_count) == (1, 1)
    par = parallel_classes(complete(4))
    assert (par.count, par.nontrivial_count) == (6, 0)
    par = parallel_classes(C3_DOUBLED)
    assert sizes(par) == [1, 1, 2] and par.nontrivial_count == 1
    with pytest.raises(PreconditionError):
        parallel_classes(Multigraph(1, ((0, 0),)))


def test_series_examples():
    ser = series_classes(cycle(4))
    assert sizes(ser) == [4] and ser.nontrivial_count == 1
    ser = series_classes(complete(4))
    assert (ser.count, ser.nontrivial_count) == (6, 0)
    ser = series_classes(theta(2, 2, 2))
    assert sizes(ser) == [2, 2, 2] and ser.nontrivial_count == 3
    with pytest.raises(PreconditionError):
        series_classes(path(3))


def test_simplify_and_triangles():
    assert simplify(dipole(3))[0] == Multigraph(2, ((0, 1),))
    assert simplify(C3_DOUBLED)[0].m == 3
    assert simplify(complete(4))[0] == complete(4)
    assert triangle_count(complete(4)) == 4
    assert triangle_count(cycle(4)) == 0
    assert triangle_count(complete(5)) == 10
    with pytest.raises(PreconditionError):
        triangle_count(C3_DOUBLED)


def test_special_classes_k4():
    classes = special_classes(complete(4))
    thetas = [c for c in classes if c.is_theta]
    infs = [c for c in classes if not c.is_theta]
    assert len(thetas) == 4 and len(infs) == 3
    assert all(c.kind == Theta((1, 1, 1)) and len(c.edges) == 3 for c in thetas)
    assert all(c.kind == Infinity((1, 1)) and len(c.edges) == 2 for c in infs)
    # stars of the four vertices and the three perfect matchings
    g = complete(4)
    for c in thetas:
        common = set.intersection(*(set(g.edges[e]) for e in c.edges))
        assert len(common) == 1
    for c in infs:
        assert len({v for e in c.edges for v in g.edges[e]}) == 4
    assert special_classes_bruteforce(g) == classes


def test_special_classes_small_cases():
    classes = special_classes(theta(2, 2, 2))
    assert [(sorted(c.edges), c.kind) for c in classes] == [(list(range(6)), Theta((2, 2, 2)))]
    assert special_classes(cycle(5)) == []
    assert special_classes_bruteforce(cycle(3)) == []
    # D4: each pair of its edges contracts to a vertex carrying two loops
    d4 = special_classes_bruteforce(dipole(4))
    assert len(d4) == 6
    assert all(c.kind == Infinity((1, 1)) for c in d4)
    assert special_classes(dipole(4)) == d4


def test_bruteforce_cap():
    with pytest.raises(CapExceededError):
        special_classes_bruteforce(cube(), cap=11)


def test_structure_report_json():
    rep = structure_report(complete(4)).to_json()
    assert (rep["p"], rep["s"], rep["theta"], rep["infinity"], rep["triangles"]) == (6, 6, 4, 3, 4)


@pytest.fixture(scope="module")
def small_corpus():
    return exhaustive(4, 8)


def test_partitions_and_series_oracle(small_corpus):
    for g in small_corpus:
        for part in (parallel_classes(g), series_classes(g)):
            assert sorted(e for b in part.blocks for e in b) == list(range(g.m))
        assert sorted(sorted(b) for b in series_classes(g).blocks) == series_by_definition(g)
        assert series_relation_is_transitive(g)


def test_series_class_removal_invariant(small_corpus):
    for g in small_corpus:
        for block in series_classes(g).blocks:
            rest = [g.edges[e] for e in range(g.m) if e not in block]
            assert count_components(g.n, rest) == len(block)


def test_special_class_invariants(small_corpus):
    for g in small_corpus:
        classes = special_classes(g)
        th = sum(c.is_theta for c in classes)
        assert len(classes) - th == choose2(series_classes(g).count) - 3 * th
        for c in classes:
            rest = [g.edges[e] for e in range(g.m) if e not in c.edges]
            assert count_components(g.n, rest) == len(c.edges) - 1
            assert not find_bridges(g.n, rest)
        assert special_classes_bruteforce(g) == classes

