"""Tropical quartic curves, tropical lines, and exact stable intersections.

Curves are built in min convention internally; a max-convention curve with
coefficients c is the point reflection of the min-convention curve of -c,
which is how the two conventions actually relate (their dual triangulation
is literally the same).

Stable intersections are computed by perturbing the line vertex by an
infinitesimal generic vector and tracking crossings with exact dual-number
arithmetic (a + b*eps with eps^2 = 0; all denominators stay constant in eps,
so first order is exact).
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from . import lattice, linalg, subdivision

MIN, MAX = "min", "max"

MIN_RAY_DIRECTIONS = ((1, 0), (0, 1), (-1, -1))
MAX_RAY_DIRECTIONS = ((-1, 0), (0, -1), (1, 1))

# Inner normals of the three boundary edges of 4*Delta_2 (min-convention ray
# directions of the curve, keyed by which boundary the dual edge lies on).
_BOUNDARY_NORMALS = {"bottom": (0, 1), "left": (1, 0), "hyp": (-1, -1)}


class NonSmoothCurve(ValueError):
    """The coefficient vector does not induce a unimodular triangulation."""


def _frac_pair(p):
    return (Fraction(p[0]), Fraction(p[1]))


class Piece:
    """A segment or ray: base + t * direction for t in [0, length] or [0, oo)."""

    __slots__ = ("base", "direction", "length", "dual")

    def __init__(self, base, direction, length=None, dual=None):
        self.base = _frac_pair(base)
        self.direction = linalg.primitive(direction)
        self.length = None if length is None else Fraction(length)
        self.dual = dual

    @property
    def bounded(self):
        return self.length is not None

    @property
    def head(self):
        if self.length is None:
            return None
        return (
            self.base[0] + self.length * self.direction[0],
            self.base[1] + self.length * self.direction[1],
        )

    def point_at(self, t):
        return (
            self.base[0] + t * self.direction[0],
            self.base[1] + t * self.direction[1],
        )

    def contains_point(self, p) -> bool:
        dx, dy = p[0] - self.base[0], p[1] - self.base[1]
        if dx * self.direction[1] != dy * self.direction[0]:
            return False
        t = dx / self.direction[0] if self.direction[0] else dy / self.direction[1]
        if t < 0:
            return False
        return self.length is None or t <= self.length

    def __repr__(self):
        end = "oo" if self.length is None else str(self.head)
        return f"Piece({self.base} -> {end}, dual={self.dual})"


class TropicalQuartic:
    """Smooth tropical plane quartic from 15 coefficients.

    vertices maps each dual triangle to the curve vertex position; edges
    holds one Piece per edge of the dual triangulation (segments for
    interior edges, rays for boundary edges).
    """

    def __init__(self, coefficients, convention=MIN):
        if convention not in (MIN, MAX):
            raise ValueError(f"convention must be 'min' or 'max': {convention}")
        coeffs = tuple(Fraction(c) for c in coefficients)
        if len(coeffs) != 15:
            raise NonSmoothCurve("a quartic needs 15 coefficients")
        self.coefficients = coeffs
        self.convention = convention
        heights = coeffs if convention == MIN else tuple(-c for c in coeffs)
        cells = subdivision.subdivision_from_weights(heights)
        if not subdivision.is_unimodular_triangulation(cells) or len(cells) != 16:
            raise NonSmoothCurve(
                "coefficients do not induce a unimodular triangulation"
            )
        self.triangulation = lattice.sort_triangles(cells)
        sign = 1 if convention == MIN else -1
        self.vertices = {
            cell: _vertex_position(heights, cell, sign) for cell in self.triangulation
        }
        self.edges = self._build_edges(sign)

    def _build_edges(self, sign):
        interior, boundary = subdivision.edge_partition(self.triangulation)
        by_edge = {}
        for cell in self.triangulation:
            a, b, c = cell
            for e in ((a, b), (a, c), (b, c)):
                by_edge.setdefault(e, []).append(cell)
        edges = []
        for e, cells in sorted(by_edge.items()):
            if e in interior:
                t1, t2 = cells
                p, q = self.vertices[t1], self.vertices[t2]
                d = (q[0] - p[0], q[1] - p[1])
                dnum = linalg.primitive((int(d[0] * d[0].denominator * d[1].denominator),
                                         int(d[1] * d[0].denominator * d[1].denominator)))
                t = d[0] / dnum[0] if dnum[0] else d[1] / dnum[1]
                edges.append(Piece(p, dnum, t, dual=e))
            else:
                (t1,) = cells
                pu, pv = lattice.POINTS[e[0]], lattice.POINTS[e[1]]
                if pu[1] == 0 and pv[1] == 0:
                    normal = _BOUNDARY_NORMALS["bottom"]
                elif pu[0] == 0 and pv[0] == 0:
                    normal = _BOUNDARY_NORMALS["left"]
                else:
                    normal = _BOUNDARY_NORMALS["hyp"]
                if sign < 0:
                    normal = (-normal[0], -normal[1])
                edges.append(Piece(self.vertices[t1], normal, None, dual=e))
        return edges

    def evaluate(self, p):
        """(value, argmin/argmax index set) of the tropical polynomial at p."""
        return evaluate(self.coefficients, self.convention, p)

    def bounding_points(self):
        return list(self.vertices.values())


def _vertex_position(heights, cell, sign):
    u, v, w = (lattice.POINTS[i] for i in cell)
    hu, hv, hw = (heights[i] for i in cell)
    sol = linalg.solve2(
        v[0] - u[0], v[1] - u[1], hu - hv,
        w[0] - u[0], w[1] - u[1], hu - hw,
    )
    if sol is None:
        raise NonSmoothCurve("degenerate dual cell")
    return (sign * sol[0], sign * sol[1])


def evaluate(coefficients, convention, p):
    coeffs = [Fraction(c) for c in coefficients]
    px, py = _frac_pair(p)
    values = [c + u[0] * px + u[1] * py for c, u in zip(coeffs, lattice.POINTS)]
    best = min(values) if convention == MIN else max(values)
    arg = frozenset(i for i, v in enumerate(values) if v == best)
    return best, arg


class TropicalLine:
    """Tropical line: three rays from a vertex."""

    def __init__(self, vertex, convention=MIN):
        if convention not in (MIN, MAX):
            raise ValueError(f"convention must be 'min' or 'max': {convention}")
        self.vertex = _frac_pair(vertex)
        self.convention = convention
        dirs = MIN_RAY_DIRECTIONS if convention == MIN else MAX_RAY_DIRECTIONS
        self.rays = tuple(Piece(self.vertex, d, None) for d in dirs)


class IntersectionComponent:
    __slots__ = ("points", "pieces", "multiplicity")

    def __init__(self, points, pieces, multiplicity):
        self.points = points          # representative points (component support)
        self.pieces = pieces          # overlap pieces, possibly empty
        self.multiplicity = multiplicity

    @property
    def is_point(self):
        return not self.pieces and len(self.points) == 1

    def __repr__(self):
        return f"Component(mult={self.multiplicity}, points={sorted(self.points)})"


class StableIntersection:
    def __init__(self, components):
        self.components = components

    @property
    def multiplicities(self):
        return tuple(sorted(c.multiplicity for c in self.components))

    @property
    def total(self):
        return sum(c.multiplicity for c in self.components)


def is_bitangent(curve: TropicalQuartic, line: TropicalLine) -> bool:
    """Two components of stable multiplicity 2, or one of multiplicity 4."""
    m = stable_intersection(curve, line).multiplicities
    return m == (2, 2) or m == (4,)


# ---------------------------------------------------------------------------
# dual numbers a + b*eps, used for the infinitesimal perturbation
# ---------------------------------------------------------------------------

class Dual:
    __slots__ = ("a", "b")

    def __init__(self, a, b=0):
        self.a = Fraction(a)
        self.b = Fraction(b)

    def __add__(self, other):
        if isinstance(other, Dual):
            return Dual(self.a + other.a, self.b + other.b)
        return Dual(self.a + other, self.b)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, Dual):
            return Dual(self.a - other.a, self.b - other.b)
        return Dual(self.a - other, self.b)

    def __rsub__(self, other):
        return Dual(other - self.a, -self.b)

    def __mul__(self, scalar):
        return Dual(self.a * scalar, self.b * scalar)

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        return Dual(self.a / scalar, self.b / scalar)

    def _key(self):
        return (self.a, self.b)

    def __lt__(self, other):
        return self._key() < _as_key(other)

    def __le__(self, other):
        return self._key() <= _as_key(other)

    def __gt__(self, other):
        return self._key() > _as_key(other)

    def __ge__(self, other):
        return self._key() >= _as_key(other)

    def __eq__(self, other):
        return self._key() == _as_key(other)

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return f"({self.a} + {self.b}e)"


def _as_key(x):
    if isinstance(x, Dual):
        return (x.a, x.b)
    return (Fraction(x), Fraction(0))


# ---------------------------------------------------------------------------
# integer intersection core
#
# Curve geometry is scaled once to integer coordinates; a line vertex enters
# as an integer homogeneous triple (X, Y, W) ~ (X/W, Y/W).  Multiplicity
# patterns are decided by pure integer sign tests; the Fraction machinery
# only runs for configurations with overlaps or when contact supports are
# actually wanted.
# ---------------------------------------------------------------------------

from math import gcd as _gcd


class CurveGeometry:
    """Integer-scaled edges of a curve (coordinates multiplied by scale)."""

    __slots__ = ("scale", "edges")

    def __init__(self, curve):
        den = 1
        for piece in curve.edges:
            vals = list(piece.base) + list(piece.head or ())
            for v in vals:
                den = den * v.denominator // _gcd(den, v.denominator)
        self.scale = den
        self.edges = []
        for piece in curve.edges:
            bx, by = int(piece.base[0] * den), int(piece.base[1] * den)
            if piece.head is None:
                self.edges.append((bx, by, None, None, piece.direction))
            else:
                hx, hy = int(piece.head[0] * den), int(piece.head[1] * den)
                self.edges.append((bx, by, hx, hy, piece.direction))


def _fast_multiplicities(geom, triple, ray_dirs):
    """Sorted component multiplicities of line /\\ curve at an exact point.

    triple = (X, Y, W) with W > 0 is the line vertex; returns None when the
    configuration has overlap components (handled by the slow path).  Total
    is always 4.
    """
    X, Y, W = triple
    D = geom.scale
    # scale everything by D*W: line vertex A, curve points P*W
    ax, ay = X * D, Y * D
    # overlap scan: parallel ray/edge on one line with overlapping ranges
    for (ux, uy) in ray_dirs:
        for (bx, by, hx, hy, f) in geom.edges:
            if ux * f[1] - uy * f[0] != 0:
                continue
            rx, ry = bx * W - ax, by * W - ay
            if rx * uy != ry * ux:
                continue
            # params of edge base/head along the ray direction (sign only)
            tp = rx * ux + ry * uy
            if tp >= 0:
                return None
            if hx is None:
                if f[0] * ux + f[1] * uy > 0:
                    return None
            else:
                th = (hx * W - ax) * ux + (hy * W - ay) * uy
                if th >= 0:
                    return None
    degenerate = False
    hits = []
    for ri, (ux, uy) in enumerate(ray_dirs):
        for ei, (bx, by, hx, hy, f) in enumerate(geom.edges):
            if hx is None:
                fx, fy = f
                bounded = False
            else:
                fx, fy = hx - bx, hy - by
                bounded = True
            det = ux * fy - uy * fx
            if det == 0:
                continue
            rx, ry = bx * W - ax, by * W - ay
            s_num = (rx * fy - ry * fx) * (1 if det > 0 else -1)
            t_num = (rx * uy - ry * ux) * (1 if det > 0 else -1)
            adet = abs(det)
            if s_num < 0 or t_num < 0:
                continue
            # t runs over [0, W] in the (D*W)-scaled world
            if bounded and t_num > adet * W:
                continue
            if s_num == 0 or t_num == 0 or (bounded and t_num == adet * W):
                degenerate = True
            mult = abs(ux * f[1] - uy * f[0])
            hits.append((ri, ei, s_num, adet, (ux, uy), mult))
    if not degenerate:
        # transversal points are pairwise distinct here, so components are
        # the individual crossings
        mults = sorted(h[5] for h in hits)
        assert sum(mults) == 4, f"stable total {sum(mults)} != 4"
        return tuple(mults)
    # perturb the vertex by eps*g for generic g, first order exact
    g = _fast_generic_direction(geom, ray_dirs)
    groups = {}
    for ri, (ux, uy) in enumerate(ray_dirs):
        g1, g2 = g
        for ei, (bx, by, hx, hy, f) in enumerate(geom.edges):
            if hx is None:
                fx, fy = f
                bounded = False
            else:
                fx, fy = hx - bx, hy - by
                bounded = True
            det = ux * fy - uy * fx
            if det == 0:
                continue
            sgn = 1 if det > 0 else -1
            rx, ry = bx * W - ax, by * W - ay
            s0 = (rx * fy - ry * fx) * sgn
            t0 = (rx * uy - ry * ux) * sgn
            s1 = -(g1 * fy - g2 * fx) * D * W * sgn
            t1 = -(g1 * uy - g2 * ux) * D * W * sgn
            adet = abs(det)
            if (s0, s1) < (0, 0):
                continue
            if (s0, s1) == (0, 0) or (t0, t1) == (0, 0):
                raise ArithmeticError("perturbation direction not generic")
            if (t0, t1) < (0, 0):
                continue
            if bounded:
                if (t0, t1) > (adet * W, 0):
                    continue
                if (t0, t1) == (adet * W, 0):
                    raise ArithmeticError("perturbation direction not generic")
            # limit point: A + (s0/adet) * u, scaled by D*W*adet
            px = ax * adet + s0 * ux
            py = ay * adet + s0 * uy
            den = adet
            gg = _gcd(_gcd(abs(px), abs(py)), den)
            key = (px // gg, py // gg, den // gg)
            mult = abs(ux * f[1] - uy * f[0])
            groups[key] = groups.get(key, 0) + mult
    mults = sorted(groups.values())
    assert sum(mults) == 4, f"stable total {sum(mults)} != 4"
    return tuple(mults)


def _fast_generic_direction(geom, ray_dirs):
    """Small integer vector not parallel to any edge or ray direction."""
    dirs = {f for (_, _, _, _, f) in geom.edges}
    dirs.update(ray_dirs)
    q = 2
    while True:
        for p in range(1, q):
            if _gcd(p, q) == 1:
                cand = (q, p)  # slope p/q < 1, never axis-parallel
                if all(cand[0] * d[1] - cand[1] * d[0] != 0 for d in dirs):
                    return cand
        q += 1


def _crossing(ray_base, ray_dir, piece):
    """Parameters (s, t) with ray_base + s*ray_dir = piece.base + t*dir.

    ray_base coordinates may be Dual numbers; directions are integers.
    Returns None for parallel directions.
    """
    det = ray_dir[0] * piece.direction[1] - ray_dir[1] * piece.direction[0]
    if det == 0:
        return None
    rx = piece.base[0] - ray_base[0]
    ry = piece.base[1] - ray_base[1]
    s = (rx * piece.direction[1] - ry * piece.direction[0]) / det
    t = (rx * ray_dir[1] - ry * ray_dir[0]) / det
    return s, t


def _transversal_crossings(vertex, ray_dirs, curve_edges):
    """Crossings of the (possibly Dual-perturbed) line with the curve.

    Returns list of (ray_index, edge_index, s, t, multiplicity); raises
    _Degenerate when any incidence is non-transversal at order zero and the
    vertex is unperturbed.
    """
    out = []
    for ri, rd in enumerate(ray_dirs):
        for ei, piece in enumerate(curve_edges):
            st = _crossing(vertex, rd, piece)
            if st is None:
                continue
            s, t = st
            if s < 0:
                continue
            if t < 0:
                continue
            if piece.length is not None and t > piece.length:
                continue
            mult = abs(rd[0] * piece.direction[1] - rd[1] * piece.direction[0])
            out.append((ri, ei, s, t, mult))
    return out


def _is_degenerate_hit(s, t, piece):
    if s == 0 or t == 0:
        return True
    return piece.length is not None and t == piece.length


def _overlaps(vertex, ray_dirs, curve_edges):
    for rd in ray_dirs:
        for piece in curve_edges:
            det = rd[0] * piece.direction[1] - rd[1] * piece.direction[0]
            if det != 0:
                continue
            # parallel: overlap iff piece base lies on the ray line and the
            # parameter ranges meet
            dx = piece.base[0] - vertex[0]
            dy = piece.base[1] - vertex[1]
            if dx * rd[1] != dy * rd[0]:
                continue
            t0 = dx / rd[0] if rd[0] else dy / rd[1]
            sign = 1 if (piece.direction[0] * rd[0] + piece.direction[1] * rd[1]) > 0 else -1
            t1 = None if piece.length is None else t0 + sign * piece.length * abs(
                Fraction(piece.direction[0], rd[0]) if rd[0] else Fraction(piece.direction[1], rd[1])
            )
            lo = t0 if t1 is None else min(t0, t1)
            hi = None if t1 is None else max(t0, t1)
            if hi is not None and hi < 0:
                continue
            if t1 is None and piece.direction[0] * rd[0] + piece.direction[1] * rd[1] < 0 and t0 < 0:
                continue
            return True
    return False


def _resonant_slopes(points):
    slopes = set()
    pts = list(points)
    for i in range(len(pts)):
        for j in range(i + 1, len(pts)):
            dx = pts[j][0] - pts[i][0]
            dy = pts[j][1] - pts[i][1]
            if dx != 0:
                slopes.add(Fraction(dy, dx))
    return slopes


def _generic_direction(curve, line):
    """Primitive-ish (1, q) avoiding edge directions and vertex-pair slopes."""
    bad = _resonant_slopes(list(curve.vertices.values()) + [line.vertex])
    for piece in curve.edges:
        if piece.direction[0] != 0:
            bad.add(Fraction(piece.direction[1], piece.direction[0]))
    for rd in line.rays:
        if rd.direction[0] != 0:
            bad.add(Fraction(rd.direction[1], rd.direction[0]))
    den = 2
    while True:
        for num in range(1, den):
            if gcd(num, den) != 1:
                continue
            q = Fraction(num, den)
            if q not in bad and -q not in bad:
                return (Fraction(1), q)
        den += 1


def _set_theoretic_components(curve, line):
    """Connected components of the set-theoretic intersection.

    Each component is a list of geometric items: ('point', p) and
    ('piece', Piece).  Components are joined when items touch.
    """
    items = []
    ray_dirs = [r.direction for r in line.rays]
    for rd in ray_dirs:
        for piece in curve.edges:
            det = rd[0] * piece.direction[1] - rd[1] * piece.direction[0]
            if det == 0:
                dx = piece.base[0] - line.vertex[0]
                dy = piece.base[1] - line.vertex[1]
                if dx * rd[1] != dy * rd[0]:
                    continue
                # overlap of the full lines; intersect parameter ranges on the ray
                t0 = dx / rd[0] if rd[0] else dy / rd[1]
                step = (Fraction(piece.direction[0], rd[0]) if rd[0]
                        else Fraction(piece.direction[1], rd[1]))
                t1 = None if piece.length is None else t0 + piece.length * step
                if t1 is None:
                    lo, hi = (t0, None) if step > 0 else (None, t0)
                else:
                    lo, hi = min(t0, t1), max(t0, t1)
                lo = Fraction(0) if lo is None else max(lo, Fraction(0))
                if hi is not None and hi < lo:
                    continue
                if hi is not None and hi == lo:
                    items.append(("point", line.vertex if lo == 0 else
                                  (line.vertex[0] + lo * rd[0], line.vertex[1] + lo * rd[1])))
                    continue
                base = (line.vertex[0] + lo * rd[0], line.vertex[1] + lo * rd[1])
                length = None if hi is None else hi - lo
                items.append(("piece", Piece(base, rd, length)))
            else:
                st = _crossing(line.vertex, rd, piece)
                s, t = st
                if s < 0 or t < 0:
                    continue
                if piece.length is not None and t > piece.length:
                    continue
                items.append(("point", (line.vertex[0] + s * rd[0],
                                        line.vertex[1] + s * rd[1])))
    # also the line vertex itself if it lies on the curve through a vertex of
    # the curve (covered: vertex lies on some edge piece).
    parent = list(range(len(items)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    def union(i, j):
        parent[find(i)] = find(j)

    def touch(a, b):
        ka, va = a
        kb, vb = b
        if ka == "point" and kb == "point":
            return va == vb
        if ka == "point":
            return vb.contains_point(va)
        if kb == "point":
            return va.contains_point(vb)
        # piece vs piece: share a point if endpoints touch either piece
        for p in (va.base, va.head):
            if p is not None and vb.contains_point(p):
                return True
        for p in (vb.base, vb.head):
            if p is not None and va.contains_point(p):
                return True
        return False

    for i in range(len(items)):
        for j in range(i + 1, len(items)):
            if find(i) != find(j) and touch(items[i], items[j]):
                union(i, j)
    groups = {}
    for i, item in enumerate(items):
        groups.setdefault(find(i), []).append(item)
    return list(groups.values())


def stable_intersection(curve: TropicalQuartic, line: TropicalLine,
                        perturbation=None) -> StableIntersection:
    """Stable intersection of a smooth quartic with a tropical line.

    The total multiplicity is always 4 (tropical Bezout), which is asserted.
    perturbation overrides the generic direction used for degenerate
    positions (it must avoid the configuration's resonant slopes).
    """
    if curve.convention != line.convention:
        raise ValueError("curve and line conventions differ")
    ray_dirs = [r.direction for r in line.rays]
    hits = _transversal_crossings(line.vertex, ray_dirs, curve.edges)
    degenerate = _overlaps(line.vertex, ray_dirs, curve.edges) or any(
        _is_degenerate_hit(s, t, curve.edges[ei]) for _, ei, s, t, _ in hits
    )
    if not degenerate:
        comps = []
        seen = {}
        for ri, ei, s, t, mult in hits:
            p = (line.vertex[0] + s * ray_dirs[ri][0], line.vertex[1] + s * ray_dirs[ri][1])
            seen[p] = seen.get(p, 0) + mult
        for p, m in sorted(seen.items()):
            comps.append(IntersectionComponent({p}, (), m))
        result = StableIntersection(comps)
        assert result.total == 4, f"stable intersection total {result.total} != 4"
        return result

    # Degenerate: perturb the vertex infinitesimally along a generic direction.
    g = perturbation if perturbation is not None else _generic_direction(curve, line)
    pert = (Dual(line.vertex[0], g[0]), Dual(line.vertex[1], g[1]))
    hits_eps = _transversal_crossings(pert, ray_dirs, curve.edges)
    for _, ei, s, t, _ in hits_eps:
        piece = curve.edges[ei]
        if s == Dual(0) or t == Dual(0) or (piece.length is not None and t == piece.length):
            raise ArithmeticError("perturbation direction not generic")
    groups = _set_theoretic_components(curve, line)
    comp_mult = [0] * len(groups)
    for ri, ei, s, t, mult in hits_eps:
        p0 = (line.vertex[0] + s.a * ray_dirs[ri][0], line.vertex[1] + s.a * ray_dirs[ri][1])
        assigned = None
        for gi, group in enumerate(groups):
            for kind, val in group:
                ok = (val == p0) if kind == "point" else val.contains_point(p0)
                if ok:
                    assigned = gi
                    break
            if assigned is not None:
                break
        if assigned is None:
            raise ArithmeticError("perturbed crossing limit not on the intersection")
        comp_mult[assigned] += mult
    comps = []
    for gi, group in enumerate(groups):
        if comp_mult[gi] == 0:
            continue
        points = {val for kind, val in group if kind == "point"}
        pieces = tuple(val for kind, val in group if kind == "piece")
        for piece in pieces:
            points.add(piece.base)
            if piece.head is not None:
                points.add(piece.head)
        comps.append(IntersectionComponent(points, pieces, comp_mult[gi]))
    result = StableIntersection(comps)
    assert result.total == 4, f"stable intersection total {result.total} != 4"
    return result
