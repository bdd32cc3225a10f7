"""Regular subdivisions of 4*Delta_2, secondary cones, GKZ vectors.

Weight vectors are 15 exact rationals in min-convention (heights of the
lifted points); the induced subdivision is the projection of the lower
facets of the lifted point set.  All arithmetic is exact.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from . import lattice, linalg, lp

POLYGON_AREA_TWICE = 32  # 4*Delta_2 has Euclidean area 8


class NotATriangulation(ValueError):
    pass


def _scaled_integer_weights(weights):
    vals = [Fraction(w) for w in weights]
    if len(vals) != 15:
        raise ValueError("a weight vector has one entry per lattice point (15)")
    lcm = 1
    for v in vals:
        lcm = lcm * v.denominator // gcd(lcm, v.denominator)
    return [int(v * lcm) for v in vals]


def subdivision_from_weights(weights) -> tuple[tuple[int, ...], ...]:
    """Cells of the regular subdivision induced by the weights.

    Each cell is the sorted tuple of indices of lattice points lying on one
    lower facet of the lift; points lifted strictly above the lower hull
    appear in no cell.  A flat lift yields the single cell (0,...,14).
    """
    h = _scaled_integer_weights(weights)
    pts = [(p[0], p[1], h[i]) for i, p in enumerate(lattice.POINTS)]
    seen_planes = set()
    cells = []
    n = len(pts)
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                a, b, c = pts[i], pts[j], pts[k]
                ux, uy, uz = b[0] - a[0], b[1] - a[1], b[2] - a[2]
                vx, vy, vz = c[0] - a[0], c[1] - a[1], c[2] - a[2]
                nx = uy * vz - uz * vy
                ny = uz * vx - ux * vz
                nz = ux * vy - uy * vx
                if nz == 0:
                    continue
                if nz < 0:
                    nx, ny, nz = -nx, -ny, -nz
                g = gcd(gcd(abs(nx), abs(ny)), nz)
                nx, ny, nz = nx // g, ny // g, nz // g
                d = nx * a[0] + ny * a[1] + nz * a[2]
                key = (nx, ny, nz, d)
                if key in seen_planes:
                    continue
                seen_planes.add(key)
                lower = True
                on_plane = []
                for m, q in enumerate(pts):
                    s = nx * q[0] + ny * q[1] + nz * q[2] - d
                    if s < 0:
                        lower = False
                        break
                    if s == 0:
                        on_plane.append(m)
                if lower:
                    cells.append(tuple(on_plane))
    return tuple(sorted(cells))


def is_unimodular_triangulation(cells) -> bool:
    """All cells triangles of lattice area 1/2."""
    for cell in cells:
        if len(cell) != 3:
            return False
        p, q, r = (lattice.POINTS[i] for i in cell)
        if linalg.lattice_area_twice(p, q, r) != 1:
            return False
    return True


def validate_triangulation(cells) -> tuple[tuple[int, int, int], ...]:
    """Check that the cells form a unimodular triangulation of 4*Delta_2.

    Returns the canonically sorted cell tuple; raises NotATriangulation with
    the reason otherwise.
    """
    sorted_cells = lattice.sort_triangles(cells)
    if len(set(sorted_cells)) != len(sorted_cells):
        raise NotATriangulation("repeated cells")
    if not is_unimodular_triangulation(sorted_cells):
        raise NotATriangulation("cells are not unit lattice triangles")
    if len(sorted_cells) * 1 != POLYGON_AREA_TWICE // 2:
        raise NotATriangulation(f"expected 16 cells, got {len(sorted_cells)}")
    used = set()
    for c in sorted_cells:
        used.update(c)
    if used != set(range(15)):
        raise NotATriangulation("not all 15 lattice points are used")
    interior, boundary = edge_partition(sorted_cells)
    if len(interior) != 18 or len(boundary) != 12:
        raise NotATriangulation("cells do not fit together along edges")
    return sorted_cells


def edge_partition(cells):
    """Split edges of a triangulation into interior (shared by two cells,
    mapped to their apex pair) and boundary (in one cell, mapped to its apex).
    """
    incident: dict[tuple[int, int], list[int]] = {}
    for cell in cells:
        a, b, c = cell
        for e, apex in (((a, b), c), ((a, c), b), ((b, c), a)):
            incident.setdefault(e, []).append(apex)
    interior = {}
    boundary = {}
    for e, apexes in incident.items():
        if len(apexes) == 2:
            interior[e] = tuple(sorted(apexes))
        elif len(apexes) == 1:
            boundary[e] = apexes[0]
        else:
            raise NotATriangulation(f"edge {e} lies in {len(apexes)} cells")
    return interior, boundary


def circuit_row(edge, apexes) -> tuple[int, ...]:
    """Secondary-cone inequality row for one interior edge.

    For the circuit a,b,c,d (edge {b,c} with apexes a < d) the unique affine
    dependence c_a*a + c_b*b + c_c*c + c_d*d = 0, sum = 0, is scaled to
    primitive integers with c_a > 0; the row encodes c . lambda >= 0.
    """
    b, c = edge
    a, d = apexes
    coeffs = linalg.affine_dependence([lattice.POINTS[i] for i in (a, b, c, d)])
    if coeffs[0] < 0:
        coeffs = [-v for v in coeffs]
    elif coeffs[0] == 0:
        raise NotATriangulation("degenerate circuit: apex coefficient vanishes")
    row = [0] * 15
    for idx, coef in zip((a, b, c, d), coeffs):
        row[idx] += coef
    return tuple(row)


def secondary_cone(cells):
    """Inequality rows (one per interior edge) of the secondary cone.

    Rows are returned sorted for determinism; the lineality dimension of
    the cone is always 3 (the affine functions on R^2).
    """
    sorted_cells = validate_triangulation(cells)
    interior, _ = edge_partition(sorted_cells)
    rows = sorted(circuit_row(e, ap) for e, ap in interior.items())
    return tuple(rows)


def is_regular(cells) -> bool:
    """Exact LP: the strict circuit system has an interior point."""
    return lp.strictly_feasible(secondary_cone(cells))


def interior_weight(cells, bound: int = 1):
    """A rational weight vector strictly inside the secondary cone."""
    t, x = lp.max_slack(secondary_cone(cells), bound=bound)
    if t is None or t <= 0:
        raise NotATriangulation("triangulation is not regular")
    return tuple(x)


def gkz_vector(cells) -> tuple[Fraction, ...]:
    """Per-point sum of Euclidean areas of incident cells (count/2 here)."""
    counts = [0] * 15
    for cell in cells:
        for i in cell:
            counts[i] += 1
    return tuple(Fraction(c, 2) for c in counts)


def minimal_representative(cells) -> tuple[tuple[int, int, int], ...]:
    """Lexicographic minimum of the S3 orbit, cells and triples sorted."""
    return min(lattice.apply_to_triangles(s, cells) for s in range(6))


def stabilizer(cells) -> tuple[int, ...]:
    """Action-table indices fixing the triangulation as a set of cells."""
    base = lattice.sort_triangles(cells)
    return tuple(s for s in range(6) if lattice.apply_to_triangles(s, base) == base)
