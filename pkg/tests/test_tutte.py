import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tutte_extremes.errors import CapExceededError, PreconditionError
from tutte_extremes.graph import (
    Multigraph,
    complete,
    cube,
    cycle,
    dipole,
    disjoint_union,
    path,
    theta,
)
from tutte_extremes.poly import BiPoly
from tutte_extremes.special import count_spanning_trees
from tutte_extremes.tutte import (
    compute,
    extreme_window,
    tutte_convolution,
    tutte_delcon,
    tutte_subset,
)

x, y = BiPoly.x(), BiPoly.y()
T_K4 = x**3 + 3 * x**2 + 2 * x + 4 * x * y + 2 * y + 3 * y**2 + y**3


@st.composite
def multigraphs(draw, max_n=5, max_m=9):
    n = draw(st.integers(1, max_n))
    vert = st.integers(0, n - 1)
    return Multigraph(n, tuple(draw(st.lists(st.tuples(vert, vert), max_size=max_m))))


@pytest.mark.parametrize("k", range(1, 8))
def test_cycles(k):
    expected = y + sum((x**i for i in range(1, k)), BiPoly())
    assert tutte_delcon(cycle(k)) == expected
    assert tutte_subset(cycle(k)) == expected


def test_named_values():
    assert tutte_delcon(dipole(3)) == x + y + y**2
    assert tutte_delcon(complete(4)) == T_K4
    assert tutte_subset(complete(4)) == T_K4
    assert tutte_subset(Multigraph(2, ((0, 1),))) == x
    assert tutte_subset(Multigraph(1, ((0, 0),))) == y
    assert tutte_convolution(Multigraph(2, ((0, 1),))) == x
    assert tutte_convolution(cycle(3)) == x + x**2 + y
    assert tutte_convolution(dipole(2)) == x + y
    assert tutte_subset(theta(2, 2, 2)) == tutte_delcon(theta(2, 2, 2))
    assert tutte_delcon(Multigraph(3)) == BiPoly.const(1)


def test_multiplicative_over_components_and_bridges():
    g = disjoint_union(complete(4), cycle(3))
    assert tutte_delcon(g) == T_K4 * (x + x**2 + y)
    assert tutte_delcon(path(4)) == x**3


@settings(max_examples=120, deadline=None)
@given(multigraphs())
def test_three_methods_agree_on_arbitrary_multigraphs(g):
    # loops, bridges and disconnected graphs included
    T = tutte_delcon(g)
    assert tutte_subset(g) == T
    assert tutte_convolution(g) == T
    assert tutte_convolution(g, prune=False) == T


@settings(max_examples=80, deadline=None)
@given(multigraphs())
def test_standard_evaluations(g):
    T = tutte_delcon(g)
    assert T(2, 2) == 2**g.m
    assert all(c > 0 for _, c in T.items())
    if g.m > 1:
        assert T.coefficient(0, 1) == T.coefficient(1, 0)


def test_spanning_trees():
    assert tutte_delcon(complete(5))(1, 1) == 125 == count_spanning_trees(complete(5))
    assert tutte_delcon(cube())(1, 1) == 384 == count_spanning_trees(cube())


def test_caps_refuse():
    with pytest.raises(CapExceededError):
        tutte_subset(complete(5), cap=9)
    with pytest.raises(CapExceededError):
        tutte_convolution(complete(5), cap=9)
    with pytest.raises(CapExceededError):
        compute(complete(5), "subset", cap=5)
    assert compute(complete(4), "convolution").poly == T_K4


def test_extreme_window_c3():
    w = extreme_window(cycle(3))
    assert w["t[0,m-n+1]"] == 1
    assert w["t[0,m-n]"] == 0
    assert w["t[0,m-n-1]"] is None
    assert w["t[1,m-n]"] == 1
    assert w["t[1,m-n-1]"] is None
    assert w["t[n-1,0]"] == 1
    assert w["t[n-2,1]"] == 0
    assert w["t[n-3,1]"] == 1


def test_extreme_window_preconditions():
    with pytest.raises(PreconditionError):
        extreme_window(path(3))
    with pytest.raises(PreconditionError):
        extreme_window(Multigraph(2, ((0, 1), (0, 1), (1, 1))))
