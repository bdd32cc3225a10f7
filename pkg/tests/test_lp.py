from fractions import Fraction

from tropical_quartics import lp


def test_bounded_maximum():
    res = lp.maximize([1, 1], [[1, 0], [0, 1], [1, 1]], [2, 3, 4])
    assert res.status == "optimal"
    assert res.value == 4


def test_infeasible():
    assert lp.maximize([1], [[1], [-1]], [0, -1]).status == "infeasible"


def test_unbounded():
    assert lp.maximize([1], [[-1]], [0]).status == "unbounded"


def test_equality_constraints():
    res = lp.maximize([1, 0], [[1, 0], [0, -1]], [5, 0], [[1, 1]], [1])
    assert res.status == "optimal" and res.value == 1


def test_exact_fractions():
    res = lp.maximize([Fraction(1, 3)], [[Fraction(1, 7)]], [Fraction(2, 5)])
    assert res.value == Fraction(1, 3) * Fraction(14, 5)


def test_strict_feasibility_of_orthant():
    rows = [[1, 0, 0], [0, 1, 0]]
    assert lp.strictly_feasible(rows, gauge_indices=(2,))


def test_strict_infeasibility():
    rows = [[1, 0, 0], [-1, 0, 0]]
    assert not lp.strictly_feasible(rows, gauge_indices=(2,))


def test_max_slack_point_is_interior():
    rows = [[1, 0, 0], [0, 1, 0], [1, 1, 0]]
    t, x = lp.max_slack(rows, gauge_indices=(2,))
    assert t > 0
    assert all(sum(r * v for r, v in zip(row, x)) >= t for row in rows)


def test_nonnegative_on_cone():
    rows = [[1, 0, 0], [0, 1, 0]]
    assert lp.nonnegative_on_cone([1, 1, 0], rows, gauge_indices=(2,))
    assert not lp.nonnegative_on_cone([1, -1, 0], rows, gauge_indices=(2,))
