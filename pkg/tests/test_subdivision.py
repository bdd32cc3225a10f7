import random
from fractions import Fraction

import pytest

from tropical_quartics import lattice, lp, subdivision as sd
from conftest import (
    FIG5_LAMBDA_1,
    FIG5_LAMBDA_2,
    FIG5_LAMBDA_3,
    FIG5_WALL_ROW,
    S_CELLS,
)


def test_flat_lift_single_cell():
    assert sd.subdivision_from_weights([0] * 15) == (tuple(range(15)),)


def test_generic_lift_is_a_triangulation():
    rng = random.Random(7)
    for _ in range(5):
        w = [Fraction(rng.randrange(0, 4000), 97) for _ in range(15)]
        cells = sd.subdivision_from_weights(w)
        if sd.is_unimodular_triangulation(cells) and len(cells) == 16:
            edges_int, edges_bd = sd.edge_partition(cells)
            # Euler count: 16 triangles, 30 edges, 15 vertices
            assert len(edges_int) + len(edges_bd) == 30
            return
    pytest.fail("no generic lift hit a triangulation")


def test_single_cell_is_not_unimodular():
    assert not sd.is_unimodular_triangulation([tuple(range(15))])


def test_s_fixture_is_unimodular():
    cells = sd.validate_triangulation(S_CELLS)
    assert sd.is_unimodular_triangulation(cells)


def test_big_triangle_is_not_unimodular():
    # {(0,0),(2,0),(0,2)} has lattice area 2
    tri = (
        lattice.INDEX_OF_POINT[(0, 0)],
        lattice.INDEX_OF_POINT[(2, 0)],
        lattice.INDEX_OF_POINT[(0, 2)],
    )
    assert not sd.is_unimodular_triangulation([tri])


def test_secondary_cone_has_18_rows(s_cells):
    assert len(sd.secondary_cone(s_cells)) == 18


def test_interior_point_round_trip(s_cells):
    rng = random.Random(3)
    cone = sd.secondary_cone(s_cells)
    w0 = sd.interior_weight(s_cells)
    for _ in range(5):
        # random strict-interior point: jitter w0 within the slack margin
        w = [x + Fraction(rng.randrange(-20, 20), 101) for x in w0]
        if all(sum(r * v for r, v in zip(row, w)) > 0 for row in cone):
            assert sd.subdivision_from_weights(w) == s_cells


def test_gkz_sum_is_24(s_cells):
    assert sum(sd.gkz_vector(s_cells)) == 24


def test_gkz_corner_single_triangle(s_cells):
    g = sd.gkz_vector(s_cells)
    corner = lattice.INDEX_OF_POINT[(0, 0)]
    count = sum(1 for c in s_cells if corner in c)
    assert count == 1 and g[corner] == Fraction(1, 2)


def test_gkz_matches_printed_cells(s_cells):
    g = sd.gkz_vector(s_cells)
    for i in range(15):
        assert g[i] == Fraction(sum(1 for c in s_cells if i in c), 2)


def test_minimal_representative_idempotent(s_cells):
    rep = sd.minimal_representative(s_cells)
    assert sd.minimal_representative(rep) == rep


def test_minimal_representative_orbit_constant(s_cells):
    rep = sd.minimal_representative(s_cells)
    for s in range(6):
        image = lattice.apply_to_triangles(s, s_cells)
        assert sd.minimal_representative(image) == rep


def test_gkz_transforms_with_the_orbit(s_cells):
    g = sd.gkz_vector(s_cells)
    for s in range(6):
        image = lattice.apply_to_triangles(s, s_cells)
        gi = sd.gkz_vector(image)
        row = lattice.ACTION_TABLE[s]
        assert all(gi[row[i]] == g[i] for i in range(15))


def test_regularity_of_fixture(s_cells):
    assert sd.is_regular(s_cells)


def test_figure5_vectors_share_one_secondary_cone():
    # the three published vectors are max-convention; the dual subdivision is
    # the min-hull of the negated weights, and all three give one
    # triangulation (the wall between their shapes is interior to the cone)
    subs = []
    for lam in (FIG5_LAMBDA_1, FIG5_LAMBDA_2, FIG5_LAMBDA_3):
        w = [-Fraction(x) for x in lam]
        subs.append(sd.subdivision_from_weights(w))
    assert subs[0] == subs[1] == subs[2]
    assert sd.is_unimodular_triangulation(subs[0]) and len(subs[0]) == 16


def test_figure5_wall_row_values():
    row = FIG5_WALL_ROW
    vals = []
    for lam in (FIG5_LAMBDA_1, FIG5_LAMBDA_2, FIG5_LAMBDA_3):
        vals.append(sum(r * Fraction(x) for r, x in zip(row, lam)))
    assert vals[1] == 0
    assert vals[0] * vals[2] < 0


def test_not_a_triangulation_errors():
    with pytest.raises(sd.NotATriangulation):
        sd.validate_triangulation([[0, 1, 2]] * 16)
    with pytest.raises(sd.NotATriangulation):
        sd.secondary_cone([[0, 1, 2]])
