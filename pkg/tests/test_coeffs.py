import pytest

from tutte_extremes.coeffs import choose2, thm1_coeffs, thm2_coeffs, verify_extremes
from tutte_extremes.corpus import exhaustive
from tutte_extremes.errors import PreconditionError
from tutte_extremes.graph import complete, cycle, dipole, path, theta
from tutte_extremes.tutte import EXTREME_LABELS, tutte_subset

TOP_Y, TOP_X = EXTREME_LABELS[:5], EXTREME_LABELS[5:]


def values(d, labels):
    return [d[label] for label in labels]


def test_choose2_extends_to_negatives():
    assert [choose2(k) for k in (-2, -1, 0, 1, 2, 3)] == [3, 1, 0, 0, 1, 3]


def test_top_y_examples():
    assert values(thm1_coeffs(cycle(4)), TOP_Y) == [1, 0, None, 1, None]
    assert values(thm1_coeffs(complete(4)), TOP_Y) == [1, 3, 2, 0, 4]
    # t[1,0] = -3*1 + (1 + 1 + 1) + 1 since each branch removal leaves a 4-cycle
    assert values(thm1_coeffs(theta(2, 2, 2)), TOP_Y) == [1, 1, 0, 3, 1]


def test_top_x_examples():
    assert values(thm2_coeffs(cycle(4)), TOP_X) == [1, 1, 1, 0, 0]
    assert values(thm2_coeffs(complete(4)), TOP_X) == [1, 3, 2, 0, 4]
    assert values(thm2_coeffs(dipole(3)), TOP_X) == [1, 0, None, 1, None]


@pytest.mark.parametrize("g", [cycle(5), complete(4), theta(1, 2, 2), theta(2, 2, 2), dipole(5)])
def test_report_matches_oracle(g):
    rep = verify_extremes(g, tutte_subset(g))
    assert rep.ok, rep.mismatches()
    assert all(e.oracle is None for e in rep.entries if not e.applicable)


def test_k4_entries():
    rep = verify_extremes(complete(4))
    e = rep["t[1,m-n-1]"]
    assert e.position == (1, 1) and e.formula == e.oracle == 4
    e = rep["t[1,m-n]"]
    assert e.position == (1, 2) and e.formula == e.oracle == 0


def test_preconditions():
    with pytest.raises(PreconditionError):
        thm1_coeffs(path(3))
    with pytest.raises(PreconditionError):
        verify_extremes(path(2))


def test_small_exhaustive_corpus():
    for g in exhaustive(4, 8):
        assert verify_extremes(g).ok, g
