import pytest

from tropical_quartics import lattice


def test_point_of_index_origin_first():
    assert lattice.point_of_index(0) == (0, 0)


def test_fifteen_points_bijective():
    pts = [lattice.point_of_index(i) for i in range(15)]
    assert len(set(pts)) == 15
    assert all(p[0] >= 0 and p[1] >= 0 and sum(p) <= 4 for p in pts)
    for i, p in enumerate(pts):
        assert lattice.index_of_point(p) == i


def test_out_of_range_index():
    with pytest.raises(IndexError):
        lattice.point_of_index(15)


def test_order_two_element_sends_14_to_0():
    # row 6 of the published table
    assert lattice.ACTION_TABLE[5] == (14, 13, 9, 12, 8, 5, 11, 7, 4, 2, 10, 6, 3, 1, 0)
    assert lattice.ACTION_TABLE[5][14] == 0


def test_row_major_order_is_the_unique_consistent_one():
    # of the two natural row-by-row readings of the triangle, only the
    # monomial-triangle order admits all six published rows as symmetries
    hom_perms = []
    from itertools import product
    for perm in product(range(3), repeat=3):
        if len(set(perm)) == 3:
            hom_perms.append(perm)

    def is_symmetric_under_table(points):
        index = {p: i for i, p in enumerate(points)}
        for row in lattice.ACTION_TABLE:
            ok = False
            for perm in hom_perms:
                if all(
                    index[
                        (
                            lattice.homogenize(points[i])[perm[1]],
                            lattice.homogenize(points[i])[perm[2]],
                        )
                    ] == row[i]
                    for i in range(15)
                ):
                    ok = True
                    break
            if not ok:
                return False
        return True

    monomial_rows = [(k - j, j) for k in range(5) for j in range(k + 1)]
    bottom_up = [(a, b) for b in range(5) for a in range(5 - b)]
    assert is_symmetric_under_table(monomial_rows)
    assert not is_symmetric_under_table(bottom_up)
    assert tuple(monomial_rows) == lattice.POINTS


def test_identity_on_triangle():
    assert lattice.apply_to_indices(0, {1, 2, 4}) == (1, 2, 4)


def test_row_two_fixes_124_as_a_set():
    assert lattice.apply_to_indices(1, {1, 2, 4}) == (1, 2, 4)


def test_composition_matches_group_product():
    composed = lattice.compose(2, 3)
    for subset in ({0, 5, 7}, {1, 2, 4}, {3, 11}):
        step = lattice.apply_to_indices(3, subset)
        two_steps = lattice.apply_to_indices(2, step)
        assert two_steps == lattice.apply_to_indices(composed, subset)


def test_group_closure_and_inverses():
    for s in range(6):
        for t in range(6):
            lattice.compose(s, t)
        assert lattice.compose(s, lattice.inverse(s)) == 0


def test_vertices_preserved():
    corners = set(lattice.CORNER_INDICES)
    for s in range(6):
        assert {lattice.ACTION_TABLE[s][i] for i in corners} == corners


def test_orbit_sizes_divide_six():
    for tri in ((0, 1, 2), (1, 2, 4), (4, 7, 8), (2, 5, 13)):
        orbit = {lattice.apply_to_triangles(s, [tri]) for s in range(6)}
        assert 6 % len(orbit) == 0


def test_interior_points_form_an_orbit():
    interior = set(lattice.INTERIOR_INDICES)
    for s in range(6):
        assert {lattice.ACTION_TABLE[s][i] for i in interior} == interior
