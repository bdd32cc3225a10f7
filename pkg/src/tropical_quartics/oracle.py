"""Geometric enumeration of the bitangent classes of a smooth quartic.

The plane of line vertices is cut by the critical lines where the
combinatorics of line-curve contact can change: for every curve vertex the
horizontal, vertical and slope-1 lines through it (the loci where a line
ray hits the vertex), and the supporting lines of every curve edge (the
loci where the line vertex sits on the curve).  Bitangency is constant on
the open cells of this arrangement, bitangent cells are glued along shared
faces, and the connected components are the classes.  Every smooth quartic
has exactly 7.

Sample points are carried as integer homogeneous triples (X, Y, W); the
bitangency test runs in pure integer arithmetic and only materializes exact
rational contact data for points that are actually bitangent.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from . import linalg
from .curve import (
    CurveGeometry,
    TropicalLine,
    TropicalQuartic,
    _fast_multiplicities,
    stable_intersection,
)

_VERTEX_LOCUS_NORMALS = ((0, 1), (1, 0), (1, -1))  # horizontal, vertical, slope-1


class OracleError(RuntimeError):
    pass


class BitangentClass:
    """A connected class of bitangent line vertices.

    cells: list of (dim, sample point); tangencies: per sampled cell, the
    tuple of (multiplicity, dual support) of the tangency components.
    Classes running off along a ray (overlap loci of parallel line and curve
    rays) are truncated at the clip box and flagged unbounded.
    """

    def __init__(self, cells, tangencies, unbounded=False):
        self.cells = cells
        self.tangencies = tangencies
        self.unbounded = unbounded

    @property
    def dimension(self):
        return max(dim for dim, _ in self.cells)

    def sample(self):
        dim = self.dimension
        return next(p for d, p in self.cells if d == dim)

    def __repr__(self):
        return (
            f"BitangentClass(dim={self.dimension}, cells={len(self.cells)}"
            + (", unbounded" if self.unbounded else "") + ")"
        )


def _triple(point):
    x, y = Fraction(point[0]), Fraction(point[1])
    w = x.denominator * y.denominator // gcd(x.denominator, y.denominator)
    X, Y = int(x * w), int(y * w)
    g = gcd(gcd(abs(X), abs(Y)), w)
    return (X // g, Y // g, w // g)


def _point(triple):
    X, Y, W = triple
    return (Fraction(X, W), Fraction(Y, W))


def _line_key(a, b, c):
    ints = linalg.clear_denominators([a, b, c])
    if ints[0] < 0 or (ints[0] == 0 and ints[1] < 0):
        ints = [-v for v in ints]
    return tuple(ints)


def critical_lines(curve: TropicalQuartic):
    lines = set()
    for v in curve.vertices.values():
        for (a, b) in _VERTEX_LOCUS_NORMALS:
            lines.add(_line_key(a, b, a * v[0] + b * v[1]))
    for piece in curve.edges:
        dx, dy = piece.direction
        a, b = -dy, dx
        lines.add(_line_key(a, b, a * piece.base[0] + b * piece.base[1]))
    return sorted(lines)


def _sign_vector(triple, lines):
    X, Y, W = triple
    out = []
    for (a, b, c) in lines:
        v = a * X + b * Y - c * W
        out.append((v > 0) - (v < 0))
    return tuple(out)


def _face_le(sv_small, sv_big) -> bool:
    return all(s == 0 or s == t for s, t in zip(sv_small, sv_big))


class _Arrangement:
    def __init__(self, curve, margin=1):
        base_lines = critical_lines(curve)
        xs = [v[0] for v in curve.vertices.values()]
        ys = [v[1] for v in curve.vertices.values()]
        pts = []
        for i in range(len(base_lines)):
            for j in range(i + 1, len(base_lines)):
                p = linalg.solve2(*base_lines[i], *base_lines[j])
                if p is not None:
                    pts.append(p)
        xs += [p[0] for p in pts]
        ys += [p[1] for p in pts]
        self.xmin = min(xs) - margin
        self.xmax = max(xs) + margin
        self.ymin = min(ys) - margin
        self.ymax = max(ys) + margin
        box_lines = [
            _line_key(1, 0, self.xmin), _line_key(1, 0, self.xmax),
            _line_key(0, 1, self.ymin), _line_key(0, 1, self.ymax),
        ]
        self.lines = list(dict.fromkeys(base_lines + box_lines))
        self.box_lines = set(box_lines)
        self._build()

    def _inside_box(self, p, closed=True):
        if closed:
            return (self.xmin <= p[0] <= self.xmax) and (self.ymin <= p[1] <= self.ymax)
        return (self.xmin < p[0] < self.xmax) and (self.ymin < p[1] < self.ymax)

    def _build(self):
        lines = self.lines
        verts = set()
        for i in range(len(lines)):
            for j in range(i + 1, len(lines)):
                p = linalg.solve2(*lines[i], *lines[j])
                if p is None or not self._inside_box(p):
                    continue
                verts.add(_triple(p))
        self.vertices = sorted(verts)
        # per line, order its vertices to make edges
        self.edge_samples = []  # (midpoint triple, line index, endpoint triples)
        for i, (a, b, c) in enumerate(lines):
            on_line = [t for t in self.vertices if a * t[0] + b * t[1] == c * t[2]]
            d = (-b, a)
            on_line.sort(key=lambda t: Fraction(t[0] * d[0] + t[1] * d[1], t[2]))
            for t1, t2 in zip(on_line, on_line[1:]):
                mid = (
                    t1[0] * t2[2] + t2[0] * t1[2],
                    t1[1] * t2[2] + t2[1] * t1[2],
                    2 * t1[2] * t2[2],
                )
                g = gcd(gcd(abs(mid[0]), abs(mid[1])), mid[2])
                self.edge_samples.append(
                    ((mid[0] // g, mid[1] // g, mid[2] // g), i, (t1, t2))
                )
        # 2-cell samples: push each edge midpoint off its line by an exact
        # safe distance (half the distance to the nearest other line)
        self.cell_samples = {}
        for mid, i, _ in self.edge_samples:
            a, b, c = lines[i]
            mx, my = _point(mid)
            for side in (1, -1):
                n = (side * a, side * b)
                tmin = None
                for j, (a2, b2, c2) in enumerate(lines):
                    if j == i:
                        continue
                    denom = a2 * n[0] + b2 * n[1]
                    if denom == 0:
                        continue
                    t = Fraction(c2 - a2 * mx - b2 * my, denom)
                    if t > 0 and (tmin is None or t < tmin):
                        tmin = t
                step = Fraction(1, 2) if tmin is None else tmin / 2
                q = (mx + step * n[0], my + step * n[1])
                if not self._inside_box(q, closed=False):
                    continue
                qt = _triple(q)
                sv = _sign_vector(qt, lines)
                if sv not in self.cell_samples:
                    self.cell_samples[sv] = qt


def _tangency_support(curve, component):
    """Dual description of a tangency component: vertex sites for curve
    vertices on the support, edge sites for curve edges met in their
    relative interior."""
    support = set()
    vertex_of = {v: cell for cell, v in curve.vertices.items()}

    def relint_contains(piece, p):
        if not piece.contains_point(p):
            return False
        if p == piece.base or (piece.head is not None and p == piece.head):
            return False
        return True

    for p in component.points:
        if p in vertex_of:
            support.add(("vertex", vertex_of[p]))
            continue
        for piece in curve.edges:
            if relint_contains(piece, p):
                support.add(("edge", piece.dual))
    for overlap in component.pieces:
        d = overlap.direction
        for piece in curve.edges:
            e = piece.direction
            if d[0] * e[1] - d[1] * e[0] != 0:
                continue
            dx = piece.base[0] - overlap.base[0]
            dy = piece.base[1] - overlap.base[1]
            if dx * d[1] != dy * d[0]:
                continue
            t0 = dx / d[0] if d[0] else dy / d[1]
            step = Fraction(e[0], d[0]) if d[0] else Fraction(e[1], d[1])
            t1 = None if piece.length is None else t0 + piece.length * step
            lo, hi = Fraction(0), overlap.length
            plo = min(t0, t1) if t1 is not None else (t0 if step > 0 else None)
            phi = max(t0, t1) if t1 is not None else (t0 if step < 0 else None)
            lo2 = lo if plo is None else max(lo, plo)
            hi2 = hi if phi is None else (phi if hi is None else min(hi, phi))
            if hi2 is None or hi2 > lo2:
                support.add(("edge", piece.dual))
        for cell, vtx in curve.vertices.items():
            if overlap.contains_point(vtx):
                support.add(("vertex", cell))
    return frozenset(support)


def enumerate_bitangent_classes(curve: TropicalQuartic, margin=1):
    """The bitangent classes of a smooth quartic; always exactly 7.

    Every class contains an arrangement vertex (classes are closed and
    bitangency is constant on open cells), and all arrangement vertices lie
    strictly inside the clip box, so clipping cannot lose or merge classes;
    clipped classes are reported with the unbounded flag.
    """
    arr = _Arrangement(curve, margin=margin)
    lines = arr.lines
    convention = curve.convention
    geom = CurveGeometry(curve)
    ray_dirs = tuple(r.direction for r in TropicalLine((0, 0), convention).rays)

    bit_cache = {}
    contacts_cache = {}

    def is_bit(triple):
        if triple not in bit_cache:
            mults = _fast_multiplicities(geom, triple, ray_dirs)
            if mults is None:
                si = stable_intersection(curve, TropicalLine(_point(triple), convention))
                contacts_cache[triple] = si
                mults = si.multiplicities
            bit_cache[triple] = mults == (2, 2) or mults == (4,)
        return bit_cache[triple]

    def contacts(triple):
        if triple not in contacts_cache:
            contacts_cache[triple] = stable_intersection(
                curve, TropicalLine(_point(triple), convention)
            )
        return contacts_cache[triple]

    items = []  # (dim, triple, sign vector)
    for t in arr.vertices:
        if is_bit(t):
            items.append((0, t, _sign_vector(t, lines)))
    seen_edges = set()
    seen_cells = set()
    frontier = True
    while frontier:
        frontier = False
        bit_svs = [sv for _, _, sv in items]
        for mid, li, (p, q) in arr.edge_samples:
            if mid in seen_edges:
                continue
            sv = _sign_vector(mid, lines)
            if not any(_face_le(osv, sv) or _face_le(sv, osv) for osv in bit_svs):
                continue
            seen_edges.add(mid)
            if is_bit(mid):
                items.append((1, mid, sv))
                frontier = True
        bit_svs = [sv for _, _, sv in items]
        for sv, q in arr.cell_samples.items():
            if sv in seen_cells:
                continue
            if not any(_face_le(osv, sv) for osv in bit_svs):
                continue
            seen_cells.add(sv)
            if is_bit(q):
                items.append((2, q, sv))
                frontier = True

    def touches_box(sv):
        return any(
            sv[i] == 0 and lines[i] in arr.box_lines for i in range(len(lines))
        )

    parent = list(range(len(items)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(len(items)):
        for j in range(i + 1, len(items)):
            if find(i) == find(j):
                continue
            svi, svj = items[i][2], items[j][2]
            if _face_le(svi, svj) or _face_le(svj, svi):
                parent[find(i)] = find(j)

    groups = {}
    for idx, (dim, t, sv) in enumerate(items):
        groups.setdefault(find(idx), []).append((dim, t, sv))
    classes = []
    for members in groups.values():
        tangencies = {}
        unbounded = False
        for dim, t, sv in members:
            si = contacts(t)
            tangencies[_point(t)] = tuple(
                sorted(
                    (c.multiplicity, _tangency_support(curve, c))
                    for c in si.components
                    if c.multiplicity >= 2
                )
            )
            unbounded = unbounded or touches_box(sv)
        classes.append(
            BitangentClass(
                sorted((d, _point(t)) for d, t, _ in members), tangencies, unbounded
            )
        )
    classes.sort(key=lambda b: b.cells[0][1])
    return classes


def class_fingerprint(bclass: BitangentClass):
    """Translation-invariant descriptor: dims of sampled cells, count of
    top-dimensional ones, and primitive directions of 1-dimensional parts."""
    dims = sorted({d for d, _ in bclass.cells})
    top = bclass.dimension
    top_cells = [p for d, p in bclass.cells if d == top]
    dirs = []
    if top == 1:
        pts = sorted(top_cells + [p for d, p in bclass.cells if d == 0])
        seen = set()
        for i in range(len(pts) - 1):
            dx = pts[i + 1][0] - pts[i][0]
            dy = pts[i + 1][1] - pts[i][1]
            if dx == 0 and dy == 0:
                continue
            d = linalg.primitive(linalg.clear_denominators([dx, dy]))
            if d[0] < 0 or (d[0] == 0 and d[1] < 0):
                d = (-d[0], -d[1])
            seen.add(d)
        dirs = sorted(seen)
    return (tuple(dims), len(top_cells), tuple(dirs))
