import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tutte_extremes.errors import GraphParseError, PreconditionError
from tutte_extremes.graph import (
    Infinity,
    Multigraph,
    OtherShape,
    Theta,
    bridges,
    classify_nullity2_shape,
    complete,
    components,
    contract,
    count_components,
    cycle,
    delete,
    dipole,
    disjoint_union,
    format_graph,
    infinity,
    parse_graph,
    path,
    restrict,
    stats,
    theta,
)


@st.composite
def multigraphs(draw, max_n=5, max_m=8, loops=True):
    n = draw(st.integers(1, max_n))
    vert = st.integers(0, n - 1)
    edges = draw(st.lists(st.tuples(vert, vert), max_size=max_m))
    if not loops:
        edges = [(u, v) for u, v in edges if u != v]
    return Multigraph(n, tuple(edges))


def bridges_by_deletion(g):
    base = count_components(g.n, g.edges)
    return {e for e in range(g.m) if count_components(g.n, delete(g, {e}).graph.edges) > base}


def test_components_examples():
    assert components(cycle(4))[0] == 1
    assert components(Multigraph(3))[0] == 3
    count, labels = components(disjoint_union(cycle(3), cycle(3)))
    assert count == 2
    assert labels == [0, 0, 0, 1, 1, 1]


def test_stats_examples():
    s = stats(complete(4))
    assert (s.n, s.m, s.c, s.rho, s.gamma) == (4, 6, 1, 3, 3)
    for k in range(1, 8):
        assert stats(cycle(k)).gamma == 1
    s = stats(Multigraph(1, ((0, 0),)))
    assert (s.n, s.m, s.c, s.rho, s.gamma) == (1, 1, 1, 0, 1)


def test_bridges_examples():
    assert bridges(path(3)) == {0, 1}
    assert bridges(cycle(4)) == set()
    g = theta(2, 2, 2)
    # first branch is edges 0, 1 (through vertex 2)
    rest = delete(g, {0, 1}).graph
    assert bridges_by_deletion(rest) == set()
    assert bridges(rest) == set()
    assert stats(rest).c == 2


def test_loops_and_parallels_never_bridges():
    g = Multigraph(3, ((0, 1), (0, 1), (1, 2), (2, 2)))
    assert bridges(g) == {2}


@settings(max_examples=200, deadline=None)
@given(multigraphs())
def test_bridges_match_deletion_oracle(g):
    assert bridges(g) == bridges_by_deletion(g)


def test_minor_examples():
    c3 = cycle(3)
    d2 = contract(c3, {0}).graph
    assert d2.n == 2 and sorted(map(sorted, d2.edges)) == [[0, 1], [0, 1]]
    loop = contract(d2, {0}).graph
    assert loop.n == 1 and loop.edges == ((0, 0),)
    k4 = complete(4)
    # edges 0=(0,1) 3=(1,2) 5=(2,3) 2=(0,3) form a 4-cycle
    r = restrict(k4, {0, 3, 5, 2}).graph
    s = stats(r)
    assert (s.n, s.c, s.gamma) == (4, 1, 1)


def test_minor_maps():
    g = Multigraph(4, ((0, 1), (1, 2), (2, 3), (3, 0), (0, 2)))
    minor = contract(g, {1})
    assert minor.edge_map == {0: 0, 2: 1, 3: 2, 4: 3}
    assert minor.vertex_map[1] == minor.vertex_map[2]
    assert minor.graph.n == 3
    d = delete(g, {0, 4})
    assert d.edge_map == {1: 0, 2: 1, 3: 2}
    assert d.graph.n == 4


def test_unknown_edge_rejected():
    with pytest.raises(PreconditionError):
        delete(cycle(3), {7})
    with pytest.raises(PreconditionError):
        contract(cycle(3), {-1})


@settings(max_examples=150, deadline=None)
@given(multigraphs())
def test_minor_invariants(g):
    assert restrict(g, range(g.m)).graph == g
    assert contract(g, ()).graph == g
    assert delete(g, ()).graph == g
    st0 = stats(g)
    br = bridges(g)
    for e, (u, v) in enumerate(g.edges):
        if u != v:
            assert stats(contract(g, {e}).graph).rho == st0.rho - 1
            if e not in br:
                assert stats(delete(g, {e}).graph).gamma == st0.gamma - 1


def test_classify_examples():
    assert classify_nullity2_shape(dipole(3)) == Theta((1, 1, 1))
    assert classify_nullity2_shape(Multigraph(1, ((0, 0), (0, 0)))) == Infinity((1, 1))
    two_triangles = Multigraph(5, ((0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)))
    assert classify_nullity2_shape(two_triangles) == Infinity((3, 3))


def test_classify_exhaustive_theta_and_infinity():
    for a in range(1, 5):
        for b in range(a, 5):
            for c in range(b, 5):
                assert classify_nullity2_shape(theta(a, b, c)) == Theta((a, b, c))
                # path order in the construction does not matter
                assert classify_nullity2_shape(theta(c, a, b)) == Theta((a, b, c))
            assert classify_nullity2_shape(infinity(b, a)) == Infinity((a, b))


def test_classify_other_and_preconditions():
    dumbbell = Multigraph(6, ((0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 5), (5, 3)))
    assert isinstance(classify_nullity2_shape(dumbbell), OtherShape)
    with pytest.raises(PreconditionError):
        classify_nullity2_shape(cycle(4))
    with pytest.raises(PreconditionError):
        classify_nullity2_shape(disjoint_union(cycle(3), dipole(3)))


def test_parse_roundtrip():
    text = "# a comment\n\nv 3\ne 0 1\ne 0 1   # parallel\ne 2 2\n"
    g, rot = parse_graph(text)
    assert g == Multigraph(3, ((0, 1), (0, 1), (2, 2)))
    assert rot is None
    assert parse_graph(format_graph(g))[0] == g


def test_parse_rotation_lines():
    text = "v 2\ne 0 1\ne 0 1\nr 0: 0a 1a\nr 1: 1b 0b\n"
    g, rot = parse_graph(text)
    assert rot == {0: [(0, 0), (1, 0)], 1: [(1, 1), (0, 1)]}
    assert parse_graph(format_graph(g, rot)) == (g, rot)


@pytest.mark.parametrize(
    "text, line",
    [
        ("e 0 1\n", 1),
        ("v 2\ne 0 5\n", 2),
        ("v 2\n\ne 0\n", 3),
        ("v 2\ne 0 1\nq 1\n", 3),
        ("v 2\ne 0 1\nr 0: 0b\n", 3),
        ("v 2\ne 0 1\nr 0: 0a\ne 0 1\n", 4),
        ("v x\n", 1),
    ],
)
def test_parse_errors_carry_line_numbers(text, line):
    with pytest.raises(GraphParseError) as info:
        parse_graph(text)
    assert info.value.line == line


def test_vertex_range_checked():
    with pytest.raises(PreconditionError):
        Multigraph(2, ((0, 2),))
