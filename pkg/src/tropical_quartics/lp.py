"""Exact rational linear programming (dense two-phase simplex, Bland's rule).

Deliberately small: the cones in this package have ~15 variables and a few
dozen rows, and the point of doing LP here at all is certifying *strict*
feasibility exactly, which floating-point solvers cannot.
"""

from __future__ import annotations

from fractions import Fraction

_ZERO = Fraction(0)
_ONE = Fraction(1)


class LPResult:
    __slots__ = ("status", "x", "value")

    def __init__(self, status: str, x=None, value=None):
        self.status = status  # "optimal" | "infeasible" | "unbounded"
        self.x = x
        self.value = value


def maximize(objective, a_ub=None, b_ub=None, a_eq=None, b_eq=None) -> LPResult:
    """Maximize objective . x over a_ub x <= b_ub, a_eq x = b_eq, x free.

    All entries may be ints or Fractions; the result is exact.
    """
    objective = [Fraction(c) for c in objective]
    n = len(objective)
    a_ub = [[Fraction(v) for v in row] for row in (a_ub or [])]
    b_ub = [Fraction(v) for v in (b_ub or [])]
    a_eq = [[Fraction(v) for v in row] for row in (a_eq or [])]
    b_eq = [Fraction(v) for v in (b_eq or [])]

    # Free variables are split x = u - w with u, w >= 0; inequality rows get
    # one slack each.  Columns: [u_0..u_{n-1}, w_0..w_{n-1}, slacks...].
    m_ub, m_eq = len(a_ub), len(a_eq)
    m = m_ub + m_eq
    ncols = 2 * n + m_ub
    rows = []
    rhs = []
    for i, row in enumerate(a_ub):
        r = row + [-v for v in row] + [_ZERO] * m_ub
        r[2 * n + i] = _ONE
        rows.append(r)
        rhs.append(b_ub[i])
    for row, b in zip(a_eq, b_eq):
        rows.append(row + [-v for v in row] + [_ZERO] * m_ub)
        rhs.append(b)
    for i in range(m):
        if rhs[i] < 0:
            rows[i] = [-v for v in rows[i]]
            rhs[i] = -rhs[i]

    # Phase 1: artificial variables, minimize their sum.
    total_cols = ncols + m
    tableau = []
    for i in range(m):
        tableau.append(rows[i] + [_ONE if j == i else _ZERO for j in range(m)] + [rhs[i]])
    basis = [ncols + i for i in range(m)]
    cost1 = [_ZERO] * ncols + [_ONE] * m
    _run_simplex(tableau, basis, cost1, total_cols)
    if _objective_value(tableau, basis, cost1) != 0:
        return LPResult("infeasible")
    _drive_out_artificials(tableau, basis, ncols)

    # Phase 2 on the original columns only.
    cost2 = [-c for c in objective] + [c for c in objective] + [_ZERO] * m_ub
    for t in tableau:
        del t[ncols:total_cols]
    unbounded = _run_simplex(tableau, basis, cost2, ncols)
    if unbounded:
        return LPResult("unbounded")
    x = [_ZERO] * n
    for i, b in enumerate(basis):
        if b < n:
            x[b] += tableau[i][-1]
        elif b < 2 * n:
            x[b - n] -= tableau[i][-1]
    value = sum(c * v for c, v in zip(objective, x))
    return LPResult("optimal", x, value)


def _objective_value(tableau, basis, cost):
    return sum(cost[b] * tableau[i][-1] for i, b in enumerate(basis))


def _run_simplex(tableau, basis, cost, ncols) -> bool:
    """Minimize cost over the tableau in place; True when unbounded."""
    m = len(tableau)
    while True:
        reduced = list(cost[:ncols])
        for i, b in enumerate(basis):
            cb = cost[b]
            if cb != 0:
                row = tableau[i]
                for j in range(ncols):
                    if row[j] != 0:
                        reduced[j] -= cb * row[j]
        enter = -1
        for j in range(ncols):
            if reduced[j] < 0:
                enter = j
                break
        if enter < 0:
            return False
        leave = -1
        best = None
        for i in range(m):
            a = tableau[i][enter]
            if a > 0:
                ratio = tableau[i][-1] / a
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best = ratio
                    leave = i
        if leave < 0:
            return True
        _pivot(tableau, basis, leave, enter)


def _pivot(tableau, basis, row, col):
    pv = tableau[row][col]
    tableau[row] = [v / pv for v in tableau[row]]
    prow = tableau[row]
    for i, trow in enumerate(tableau):
        if i != row and trow[col] != 0:
            f = trow[col]
            tableau[i] = [v - f * w for v, w in zip(trow, prow)]
    basis[row] = col


def _drive_out_artificials(tableau, basis, ncols):
    for i in range(len(tableau)):
        if basis[i] >= ncols:
            for j in range(ncols):
                if tableau[i][j] != 0:
                    _pivot(tableau, basis, i, j)
                    break
            # A row with no real pivot is redundant; its artificial stays
            # basic at value zero, which phase 2 then ignores.


def max_slack(rows, gauge_indices=(0, 1, 2), bound: int = 1):
    """Maximize t subject to row . x >= t for all rows, t <= bound.

    The gauge pins coordinates to zero (kills the lineality of affine
    functions).  Returns (t_star, x) with x a point achieving t_star, or
    (None, None) when the system is infeasible even with t unconstrained.
    rows may be empty, in which case t = bound at the origin.
    """
    if not rows:
        return Fraction(bound), [_ZERO] * 15
    n = len(rows[0])
    # Variables: x (n free) and t.
    objective = [_ZERO] * n + [_ONE]
    a_ub = []
    b_ub = []
    for row in rows:
        a_ub.append([-Fraction(v) for v in row] + [_ONE])
        b_ub.append(_ZERO)
    a_ub.append([_ZERO] * n + [_ONE])
    b_ub.append(Fraction(bound))
    a_eq = []
    b_eq = []
    for g in gauge_indices:
        e = [_ZERO] * (n + 1)
        e[g] = _ONE
        a_eq.append(e)
        b_eq.append(_ZERO)
    res = maximize(objective, a_ub, b_ub, a_eq, b_eq)
    if res.status != "optimal":
        return (None, None)
    return res.value, res.x[:n]


def strictly_feasible(rows, gauge_indices=(0, 1, 2)) -> bool:
    """Whether rows . x > 0 has a solution (x free, gauge coordinates 0).

    Since the rows cut out a cone, strict feasibility is equivalent to
    solvability of rows . x >= 1, which needs only a phase-1 simplex.
    """
    if not rows:
        return True
    return feasible_point(rows, gauge_indices) is not None


def feasible_point(rows, gauge_indices=(0, 1, 2)):
    """A point with rows . x >= 1 (None when there is none)."""
    n = len(rows[0])
    keep = [j for j in range(n) if j not in gauge_indices]
    a_ub = [[-Fraction(row[j]) for j in keep] for row in rows]
    b_ub = [Fraction(-1)] * len(rows)
    res = maximize([_ZERO] * len(keep), a_ub, b_ub)
    if res.status != "optimal":
        return None
    x = [_ZERO] * n
    for j, v in zip(keep, res.x):
        x[j] = v
    return x


def nonnegative_on_cone(functional, cone_rows, gauge_indices=(0, 1, 2)) -> bool:
    """True when functional . x >= 0 for every x with cone_rows . x >= 0.

    Checked by minimizing the functional over the cone cut by the
    normalization sum(cone_rows . x) = 1 (with the usual gauge).
    """
    n = len(functional)
    a_ub = [[-Fraction(v) for v in row] for row in cone_rows]
    b_ub = [_ZERO] * len(cone_rows)
    norm = [sum(Fraction(row[j]) for row in cone_rows) for j in range(n)]
    a_eq = [norm]
    b_eq = [_ONE]
    for g in gauge_indices:
        e = [_ZERO] * n
        e[g] = _ONE
        a_eq.append(e)
        b_eq.append(_ZERO)
    res = maximize([-Fraction(v) for v in functional], a_ub, b_ub, a_eq, b_eq)
    if res.status == "infeasible":
        return True  # cone is trivial under the gauge
    if res.status == "unbounded":
        return False
    return -res.value >= 0
