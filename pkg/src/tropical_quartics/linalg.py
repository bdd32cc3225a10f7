"""Small exact-rational linear algebra used across the geometry modules."""

from __future__ import annotations

from fractions import Fraction
from math import gcd


def det2(a, b, c, d) -> Fraction:
    return a * d - b * c


def orient(p, q, r):
    """Sign of the signed area of the triangle p,q,r (positive = ccw)."""
    v = (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])
    return (v > 0) - (v < 0)


def lattice_area_twice(p, q, r) -> int:
    return abs((q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0]))


def primitive(v: tuple[int, int]) -> tuple[int, int]:
    g = gcd(abs(v[0]), abs(v[1]))
    if g == 0:
        raise ValueError("zero vector has no primitive form")
    return (v[0] // g, v[1] // g)


def clear_denominators(values) -> list[int]:
    """Scale rationals to coprime integers (empty or all-zero input stays as is)."""
    vals = [Fraction(v) for v in values]
    lcm = 1
    for v in vals:
        lcm = lcm * v.denominator // gcd(lcm, v.denominator)
    ints = [int(v * lcm) for v in vals]
    g = 0
    for n in ints:
        g = gcd(g, abs(n))
    if g > 1:
        ints = [n // g for n in ints]
    return ints


def affine_dependence(points) -> list[int]:
    """Primitive integer coefficients c with sum(c) = 0 and sum(c_i * p_i) = 0.

    The points must span a one-dimensional space of affine dependences
    (a circuit, possibly with zero coefficients on redundant points).
    """
    n = len(points)
    rows = [[1] * n, [p[0] for p in points], [p[1] for p in points]]
    ker = kernel_vector(rows)
    if ker is None:
        raise ValueError("points admit no affine dependence")
    return clear_denominators(ker)


def kernel_vector(rows) -> list[Fraction] | None:
    """One nonzero rational vector in the kernel of the row matrix, or None."""
    rows = [[Fraction(x) for x in row] for row in rows]
    ncols = len(rows[0])
    pivot_cols = []
    r = 0
    for c in range(ncols):
        pivot = None
        for i in range(r, len(rows)):
            if rows[i][c] != 0:
                pivot = i
                break
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        pv = rows[r][c]
        rows[r] = [x / pv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivot_cols.append(c)
        r += 1
        if r == len(rows):
            break
    free = [c for c in range(ncols) if c not in pivot_cols]
    if not free:
        return None
    f0 = free[0]
    vec = [Fraction(0)] * ncols
    vec[f0] = Fraction(1)
    for i, c in enumerate(pivot_cols):
        vec[c] = -rows[i][f0]
    return vec


def solve2(a11, a12, b1, a21, a22, b2):
    """Solve the 2x2 system; returns (x, y) or None if singular."""
    d = a11 * a22 - a12 * a21
    if d == 0:
        return None
    return (Fraction(b1 * a22 - b2 * a12, 1) / d, Fraction(a11 * b2 - a21 * b1, 1) / d)
