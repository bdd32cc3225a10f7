"""Enumeration of all regular unimodular triangulations of 4*Delta_2.

BFS over diagonal flips through the (connected) graph of full lattice
triangulations, canonicalized to S3-orbit representatives, then filtered by
exact-LP regularity.  Also classifies the orbits that can never satisfy the
genericity condition (a curve vertex with three bounded edges in the line
directions whose two shortest lengths are forced equal on the whole cone).
"""

from __future__ import annotations

from collections import deque
from fractions import Fraction

from . import lattice, linalg, lp, subdivision

Triangulation = tuple[tuple[int, int, int], ...]


def staircase_seed() -> Triangulation:
    cells = []
    for a in range(4):
        for b in range(4 - a):
            p = lattice.INDEX_OF_POINT[(a, b)]
            q = lattice.INDEX_OF_POINT[(a + 1, b)]
            r = lattice.INDEX_OF_POINT[(a, b + 1)]
            cells.append((p, q, r))
            if a + b <= 2:
                s = lattice.INDEX_OF_POINT[(a + 1, b + 1)]
                cells.append((q, r, s))
    return subdivision.validate_triangulation(cells)


def flip_neighbors(cells: Triangulation) -> list[Triangulation]:
    """Triangulations one diagonal flip away, unimodular ones only."""
    cells = lattice.sort_triangles(cells)
    interior, _ = subdivision.edge_partition(cells)
    cellset = set(cells)
    out = []
    for (b, c), (a, d) in interior.items():
        pa, pb, pc, pd = (lattice.POINTS[i] for i in (a, b, c, d))
        # The new diagonal {a,d} must cross the old one strictly.
        if linalg.orient(pa, pd, pb) == 0 or linalg.orient(pa, pd, pc) == 0:
            continue
        if linalg.orient(pa, pd, pb) == linalg.orient(pa, pd, pc):
            continue
        t_new1 = tuple(sorted((a, b, d)))
        t_new2 = tuple(sorted((a, c, d)))
        if linalg.lattice_area_twice(pa, pb, pd) != 1:
            continue
        if linalg.lattice_area_twice(pa, pc, pd) != 1:
            continue
        new_cells = cellset - {tuple(sorted((a, b, c))), tuple(sorted((b, c, d)))}
        new_cells |= {t_new1, t_new2}
        out.append(tuple(sorted(new_cells)))
    return out


def enumerate_unimodular_orbits(seed: Triangulation | None = None) -> list[Triangulation]:
    """All full (hence unimodular) triangulations of 4*Delta_2 up to S3."""
    start = subdivision.minimal_representative(seed or staircase_seed())
    seen = {start}
    queue = deque([start])
    while queue:
        current = queue.popleft()
        for nb in flip_neighbors(current):
            rep = subdivision.minimal_representative(nb)
            if rep not in seen:
                seen.add(rep)
                queue.append(rep)
    return sorted(seen)


def enumerate_exhaustive() -> list[Triangulation]:
    """Fallback: grow triangulations cell by cell with backtracking.

    Guarded behind the census CLI flag; only needed if flip connectivity
    ever failed to reach the full count.
    """
    pts = lattice.POINTS
    unit_triangles = []
    n = len(pts)
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                if linalg.lattice_area_twice(pts[i], pts[j], pts[k]) == 1:
                    unit_triangles.append((i, j, k))
    results: set[Triangulation] = set()

    def segments_cross(p1, p2, q1, q2) -> bool:
        o1 = linalg.orient(p1, p2, q1)
        o2 = linalg.orient(p1, p2, q2)
        o3 = linalg.orient(q1, q2, p1)
        o4 = linalg.orient(q1, q2, p2)
        return o1 * o2 < 0 and o3 * o4 < 0

    def compatible(t, chosen) -> bool:
        edges_t = [(t[0], t[1]), (t[0], t[2]), (t[1], t[2])]
        for s in chosen:
            shared = len(set(t) & set(s))
            if shared == 3:
                return False
            edges_s = [(s[0], s[1]), (s[0], s[2]), (s[1], s[2])]
            for e in edges_t:
                for f in edges_s:
                    if len({*e, *f}) == 4 and segments_cross(
                        pts[e[0]], pts[e[1]], pts[f[0]], pts[f[1]]
                    ):
                        return False
        return True

    def extend(chosen: list, start: int) -> None:
        if len(chosen) == 16:
            results.add(subdivision.minimal_representative(chosen))
            return
        for idx in range(start, len(unit_triangles)):
            t = unit_triangles[idx]
            if compatible(t, chosen):
                chosen.append(t)
                extend(chosen, idx + 1)
                chosen.pop()

    extend([], 0)
    full = [r for r in results if len({i for c in r for i in c}) == 15]
    return sorted(full)


def vertex_functionals(triangle):
    """Rows (fx, fy) with vertex(lambda) = (fx . lambda, fy . lambda).

    Min convention: the curve vertex dual to the triangle solves
    lambda_u + u.x equal over its three monomials.
    """
    u, v, w = (lattice.POINTS[i] for i in triangle)
    a11, a12 = v[0] - u[0], v[1] - u[1]
    a21, a22 = w[0] - u[0], w[1] - u[1]
    det = a11 * a22 - a12 * a21
    fx = [Fraction(0)] * 15
    fy = [Fraction(0)] * 15
    iu, iv, iw = triangle
    # rhs1 = l_u - l_v, rhs2 = l_u - l_w; x = (a22*rhs1 - a12*rhs2)/det, etc.
    for idx, c1, c2 in ((iu, 1, 1), (iv, -1, 0), (iw, 0, -1)):
        fx[idx] += Fraction(a22 * c1 - a12 * c2, det)
        fy[idx] += Fraction(a11 * c2 - a21 * c1, det)
    return fx, fy


def _lower_unit_triangles(cells):
    """Cells of shape {(a,b),(a+1,b),(a,b+1)} (curve vertex with edge
    directions e1, e2, -e1-e2 in min convention)."""
    out = []
    for cell in cells:
        ps = sorted(lattice.POINTS[i] for i in cell)
        (x0, y0), (x1, y1), (x2, y2) = ps
        if (x1, y1) == (x0, y0 + 1) and (x2, y2) == (x0 + 1, y0):
            out.append(cell)
    return out


def can_never_be_generic(cells: Triangulation) -> bool:
    """True when every coefficient vector in the secondary cone yields a
    curve vertex (of the three-bounded-edge pattern) with a tied shortest
    edge: two length functionals identical and never above the third."""
    cells = lattice.sort_triangles(cells)
    interior, _ = subdivision.edge_partition(cells)
    cone = None
    w0 = None
    for cell in _lower_unit_triangles(cells):
        a, b, c = cell
        edges = [tuple(sorted(e)) for e in ((a, b), (a, c), (b, c))]
        if any(e not in interior for e in edges):
            continue  # some edge of the vertex is a ray, pattern needs bounded
        raw = []
        fx0, fy0 = vertex_functionals(cell)
        for e in edges:
            other = next(
                t for t in cells if e[0] in t and e[1] in t and t != cell
            )
            fx1, fy1 = vertex_functionals(other)
            dx = [p - q for p, q in zip(fx0, fx1)]
            dy = [p - q for p, q in zip(fy0, fy1)]
            d = linalg.primitive(
                (lattice.POINTS[e[1]][1] - lattice.POINTS[e[0]][1],
                 lattice.POINTS[e[0]][0] - lattice.POINTS[e[1]][0])
            )
            func = dx if d[0] != 0 else dy
            denom = d[0] if d[0] != 0 else d[1]
            raw.append(tuple(Fraction(v, denom) for v in func))
        for i in range(3):
            for j in range(i + 1, 3):
                same = raw[i] == raw[j] or raw[i] == tuple(-v for v in raw[j])
                if not same:
                    continue
                # Candidate forced tie: orient lengths positively on the cone
                # interior, then ask the LP whether the third edge can ever
                # be strictly shorter.
                if cone is None:
                    cone = subdivision.secondary_cone(cells)
                    w0 = lp.feasible_point(cone)
                lengths = []
                for func in raw:
                    val = sum(f * x for f, x in zip(func, w0))
                    lengths.append(func if val > 0 else tuple(-v for v in func))
                if lengths[i] != lengths[j]:
                    continue
                k = 3 - i - j
                diff = [p - q for p, q in zip(lengths[k], lengths[i])]
                if lp.nonnegative_on_cone(diff, cone):
                    return True
    return False


def enumerate_census():
    """Orbit representatives of regular unimodular triangulations with
    genericity flags, sorted lexicographically.

    Returns a list of (cells, is_generic) pairs.
    """
    orbits = enumerate_unimodular_orbits()
    out = []
    for rep in orbits:
        if subdivision.is_regular(rep):
            out.append((rep, not can_never_be_generic(rep)))
    return out
