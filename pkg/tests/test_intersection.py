import random
from fractions import Fraction

import pytest

from tropical_quartics import subdivision as sd
from tropical_quartics.curve import (
    MIN,
    TropicalLine,
    TropicalQuartic,
    is_bitangent,
    stable_intersection,
)


@pytest.fixture(scope="module")
def s_curve(request):
    cells = sd.validate_triangulation(request.getfixturevalue("s_cells"))
    return TropicalQuartic(sd.interior_weight(cells), MIN)


def test_far_line_four_simple_points(s_curve):
    si = stable_intersection(s_curve, TropicalLine((-100, -57), MIN))
    assert si.multiplicities == (1, 1, 1, 1)
    assert all(c.is_point for c in si.components)
    assert not is_bitangent(s_curve, TropicalLine((-100, -57), MIN))


def test_line_vertex_at_curve_vertex_is_bitangent(s_curve):
    v = s_curve.vertices[s_curve.triangulation[0]]
    line = TropicalLine(v, MIN)
    si = stable_intersection(s_curve, line)
    assert si.multiplicities == (2, 2)
    assert is_bitangent(s_curve, line)


def test_total_multiplicity_always_four(s_curve):
    rng = random.Random(11)
    for _ in range(50):
        v = (Fraction(rng.randrange(-400, 200), 7),
             Fraction(rng.randrange(-500, 200), 11))
        si = stable_intersection(s_curve, TropicalLine(v, MIN))
        assert si.total == 4


def test_convention_mismatch_rejected(s_curve):
    from tropical_quartics.curve import MAX
    with pytest.raises(ValueError):
        stable_intersection(s_curve, TropicalLine((0, 0), MAX))


def test_perturbation_independence(s_curve):
    # degenerate positions must give the same stable intersection for any
    # generic perturbation direction
    from tropical_quartics.curve import _generic_direction
    for idx in (0, 3, 7):
        v = s_curve.vertices[s_curve.triangulation[idx]]
        line = TropicalLine(v, MIN)
        g1 = _generic_direction(s_curve, line)
        g2 = (g1[0], g1[1] + Fraction(1, 997))  # a second generic slope
        si1 = stable_intersection(s_curve, line, perturbation=g1)
        si2 = stable_intersection(s_curve, line, perturbation=g2)
        assert si1.multiplicities == si2.multiplicities
        pts1 = sorted(sorted(c.points) for c in si1.components)
        pts2 = sorted(sorted(c.points) for c in si2.components)
        assert pts1 == pts2
