"""Lattice points of 4*Delta_2 in the fixed order, and the S3 action on them.

The 15 lattice points (u1, u2) with u1 + u2 <= 4 are numbered row by row
in the monomial-triangle layout: rows of constant total degree u1 + u2,
read with u1 descending, so index 0 is (0,0), indices 1,2 are (1,0),(0,1),
and index 14 is the corner (0,4).  This is the unique row-major order under
which all six permutations below act as coordinate permutations of the
homogenized points (4-u1-u2, u1, u2); see ``_verify_action_table``.
"""

from __future__ import annotations

from itertools import product

POINTS: tuple[tuple[int, int], ...] = tuple(
    (k - j, j) for k in range(5) for j in range(k + 1)
)

INDEX_OF_POINT: dict[tuple[int, int], int] = {p: i for i, p in enumerate(POINTS)}

CORNER_INDICES = (0, 10, 14)          # (0,0), (4,0), (0,4)
INTERIOR_INDICES = (4, 7, 8)          # (1,1), (2,1), (1,2)
BOUNDARY_INDICES = tuple(
    i for i, (a, b) in enumerate(POINTS) if a == 0 or b == 0 or a + b == 4
)

# The six permutations, identity first, in the fixed published order.
# Row i sends point index j to ACTION_TABLE[i][j].
ACTION_TABLE: tuple[tuple[int, ...], ...] = (
    (0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14),
    (0, 2, 1, 5, 4, 3, 9, 8, 7, 6, 14, 13, 12, 11, 10),
    (10, 6, 11, 3, 7, 12, 1, 4, 8, 13, 0, 2, 5, 9, 14),
    (10, 11, 6, 12, 7, 3, 13, 8, 4, 1, 14, 9, 5, 2, 0),
    (14, 9, 13, 5, 8, 12, 2, 4, 7, 11, 0, 1, 3, 6, 10),
    (14, 13, 9, 12, 8, 5, 11, 7, 4, 2, 10, 6, 3, 1, 0),
)


def point_of_index(i: int) -> tuple[int, int]:
    """Return the lattice point (u1, u2) with the given index, 0 <= i <= 14."""
    if not 0 <= i <= 14:
        raise IndexError(f"lattice point index out of range: {i}")
    return POINTS[i]


def index_of_point(p: tuple[int, int]) -> int:
    try:
        return INDEX_OF_POINT[tuple(p)]
    except KeyError:
        raise ValueError(f"not a lattice point of 4*Delta_2: {p}") from None


def homogenize(p: tuple[int, int]) -> tuple[int, int, int]:
    return (4 - p[0] - p[1], p[0], p[1])


def compose(sigma: int, tau: int) -> int:
    """Index of the table element acting like sigma after tau."""
    composed = tuple(ACTION_TABLE[sigma][ACTION_TABLE[tau][j]] for j in range(15))
    return ACTION_TABLE.index(composed)


def inverse(sigma: int) -> int:
    row = ACTION_TABLE[sigma]
    inv = tuple(row.index(j) for j in range(15))
    return ACTION_TABLE.index(inv)


def apply_to_index(sigma: int, i: int) -> int:
    return ACTION_TABLE[sigma][i]


def apply_to_indices(sigma: int, indices) -> tuple[int, ...]:
    """Image of a set of point indices, sorted ascending."""
    row = ACTION_TABLE[sigma]
    return tuple(sorted(row[i] for i in indices))


def apply_to_triangles(sigma: int, triangles) -> tuple[tuple[int, ...], ...]:
    """Image of a collection of index triples; each triple and the list re-sorted."""
    row = ACTION_TABLE[sigma]
    return tuple(sorted(tuple(sorted(row[i] for i in t)) for t in triangles))


def sort_triangles(triangles) -> tuple[tuple[int, ...], ...]:
    return tuple(sorted(tuple(sorted(t)) for t in triangles))


def _verify_action_table() -> tuple[tuple[int, int, int], ...]:
    # Every row must be a genuine symmetry: a permutation of the homogenized
    # coordinates, and the rows must be closed under composition (a copy of S3).
    hom = [homogenize(p) for p in POINTS]
    coordinate_perms = {}
    for perm in product(range(3), repeat=3):
        if len(set(perm)) != 3:
            continue
        images = tuple(
            INDEX_OF_POINT[(h[perm[1]], h[perm[2]])] for h in hom
        )
        coordinate_perms[images] = perm
    perms = []
    for row in ACTION_TABLE:
        if row not in coordinate_perms:
            raise AssertionError("action table row is not an S3 symmetry of 4*Delta_2")
        perms.append(coordinate_perms[row])
    for s in range(6):
        for t in range(6):
            compose(s, t)
    return tuple(perms)


# COORD_PERMS[i] is the permutation p of homogeneous tropical coordinates
# realizing action row i: the row sends the point with homogenized exponents
# h to the point (h[p[1]], h[p[2]]).
COORD_PERMS = _verify_action_table()


def inverse_row(sigma: int) -> tuple[int, ...]:
    row = ACTION_TABLE[sigma]
    return tuple(row.index(j) for j in range(15))
