import random
from collections import defaultdict
from fractions import Fraction

import pytest

from tropical_quartics import subdivision as sd
from tropical_quartics.curve import (
    MAX,
    MIN,
    NonSmoothCurve,
    TropicalLine,
    TropicalQuartic,
    evaluate,
)
from conftest import C_MAX_COEFFS


@pytest.fixture(scope="module")
def s_curve(request):
    cells = sd.validate_triangulation(request.getfixturevalue("s_cells"))
    return TropicalQuartic(sd.interior_weight(cells), MIN)


def test_constructor_rejects_flat():
    with pytest.raises(NonSmoothCurve):
        TropicalQuartic([0] * 15, MIN)


def test_section3_max_curve_is_smooth():
    curve = TropicalQuartic(C_MAX_COEFFS, MAX)
    assert len(curve.triangulation) == 16
    assert len(curve.vertices) == 16


def test_sixteen_trivalent_vertices_and_balancing(s_curve):
    star = defaultdict(list)
    for e in s_curve.edges:
        for cell, v in s_curve.vertices.items():
            if v == e.base:
                star[cell].append(e.direction)
            elif e.head is not None and v == e.head:
                star[cell].append((-e.direction[0], -e.direction[1]))
    assert len(star) == 16
    for dirs in star.values():
        assert len(dirs) == 3
        assert sum(d[0] for d in dirs) == 0 and sum(d[1] for d in dirs) == 0


def test_twelve_rays(s_curve):
    assert sum(1 for e in s_curve.edges if not e.bounded) == 12


def test_max_is_point_reflection_of_min():
    minus = [-c for c in C_MAX_COEFFS]
    cmax = TropicalQuartic(C_MAX_COEFFS, MAX)
    cmin = TropicalQuartic(minus, MIN)
    assert cmax.triangulation == cmin.triangulation
    for cell, v in cmin.vertices.items():
        assert cmax.vertices[cell] == (-v[0], -v[1])


def test_evaluate_flat_at_interior_point():
    value, argmin = evaluate([0] * 15, MIN, (1, 1))
    assert value == 0 and argmin == frozenset({0})


def test_vertex_attains_its_triangle(s_curve):
    for cell, v in s_curve.vertices.items():
        _, argmin = s_curve.evaluate(v)
        assert set(cell) <= argmin


def test_edge_midpoints_attain_exactly_the_dual_edge(s_curve):
    for piece in s_curve.edges:
        if not piece.bounded:
            continue
        mid = piece.point_at(piece.length / 2)
        _, argmin = s_curve.evaluate(mid)
        assert argmin == frozenset(piece.dual)


def test_line_ray_directions():
    lmin = TropicalLine((0, 0), MIN)
    assert {r.direction for r in lmin.rays} == {(1, 0), (0, 1), (-1, -1)}
    lmax = TropicalLine((0, 0), MAX)
    assert {r.direction for r in lmax.rays} == {(-1, 0), (0, -1), (1, 1)}


def test_unit_triangle_analogue_vertex_at_origin():
    # degree-one sanity check of the vertex equations: all-zero weights on
    # the unit triangle give the vertex 0 = x = y
    from tropical_quartics.curve import _vertex_position
    pos = _vertex_position([Fraction(0)] * 15, (0, 1, 2), 1)
    assert pos == (0, 0)
