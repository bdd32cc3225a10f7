"""Experiment: derive per-class lifting sign conditions for the S fixture."""
import sys, time
sys.path.insert(0, 'src')
from fractions import Fraction
from math import comb
from tropical_quartics import curve as cv, subdivision as sd, oracle, lattice

S = [[0,1,2],[1,2,4],[2,4,12],[4,7,12],[2,8,12],[2,8,13],[8,12,13],[2,5,13],[5,9,13],[9,13,14],[7,11,12],[7,10,11],[4,7,10],[4,6,10],[3,4,6],[1,3,4]]


def restricted_valuations(lam, v):
    """V_i and dominant (u,k) terms of r(x) = q(x, y(x)) for the line at v."""
    vx, vy = v
    out = []
    for i in range(5):
        best = None
        terms = []
        for uidx, (u1, u2) in enumerate(lattice.POINTS):
            k = i - u1
            if k < 0 or k > u2:
                continue
            val = lam[uidx] - k * vx + u2 * vy
            if best is None or val < best:
                best = val
                terms = [(uidx, k)]
            elif val == best:
                terms.append((uidx, k))
        out.append((best, terms))
    return out


def lower_hull_edges(vals):
    """Lower hull of [(i, V_i)]; returns list of (i0, i1, slope)."""
    pts = [(i, v) for i, (v, _) in enumerate(vals) if v is not None]
    hull = []
    for p in pts:
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            if (y2 - y1) * (p[0] - x1) >= (p[1] - y1) * (x2 - x1):
                hull.pop()
            else:
                break
        hull.append(p)
    return [(a[0], b[0], Fraction(b[1] - a[1], b[0] - a[0])) for a, b in zip(hull, hull[1:])]


def term_sign_monomial(uidx, k):
    """(s-index, sigma exponent vector, positive integer magnitude, sign).

    term = a_u * C(u2,k) * (-1)^u2 * alpha^(u2-k) beta^k / gamma^u2
    """
    u1, u2 = lattice.POINTS[uidx]
    sigma = ((u2 - k) % 2, k % 2, u2 % 2)   # exponents of (sa, sb, sg)
    sign = -1 if u2 % 2 else 1
    return uidx, sigma, comb(u2, k), sign


def initial_monomial(terms):
    """Collapse dominant terms; returns (s_indices tuple, sigma, sign, magnitude)
    or None if the initial is not a single signed monomial in (s, sigma)."""
    mons = {}
    for uidx, k in terms:
        _, sigma, mag, sign = term_sign_monomial(uidx, k)
        key = (uidx, sigma)
        mons[key] = mons.get(key, 0) + sign * mag
    mons = {k: v for k, v in mons.items() if v != 0}
    if len(mons) != 1:
        return None
    (uidx, sigma), coef = next(iter(mons.items()))
    return ((uidx,), sigma, 1 if coef > 0 else -1, abs(coef))


def combine(m1, m2):
    """Product of two signed monomials."""
    idx = tuple(sorted(m1[0] + m2[0]))
    sigma = tuple((a + b) % 2 for a, b in zip(m1[1], m2[1]))
    return (idx, sigma, m1[2] * m2[2], m1[3] * m2[3])


def reduce_indices(idx):
    """s_u^2 = 1: keep indices with odd multiplicity."""
    out = []
    for i in sorted(set(idx)):
        if idx.count(i) % 2:
            out.append(i)
    return tuple(out)


def tangency_conditions(lam, v):
    """Per-hull-edge lifting conditions at line vertex v.

    Returns None if v is not a lifting representative (hull widths not
    {2,2} or {4}), else list of ('cond', s_indices, sigma, sign) or
    ('free',) per tangency, or 'unsupported' markers.
    """
    vals = restricted_valuations(lam, v)
    edges = lower_hull_edges(vals)
    widths = sorted(e[1] - e[0] for e in edges)
    if widths not in ([2, 2], [4]):
        return None
    conds = []
    for (i0, i1, slope) in edges:
        w = i1 - i0
        if w == 2:
            A = initial_monomial(vals[i0][1])
            C = initial_monomial(vals[i1][1])
            if A is None or C is None:
                conds.append(('unsupported', 'sum-initial'))
                continue
            mid_on = vals[i0 + 1][0] is not None and \
                Fraction(vals[i0][0] + vals[i1][0], 2) == vals[i0 + 1][0]
            AC = combine(A, C)
            if mid_on:
                B = initial_monomial(vals[i0 + 1][1])
                if B is None:
                    conds.append(('unsupported', 'sum-initial-mid'))
                    continue
                b2 = B[3] * B[3]
                if b2 > 4 * AC[3]:
                    conds.append(('free',))
                    continue
                if b2 == 4 * AC[3]:
                    conds.append(('unsupported', 'disc-tie'))
                    continue
            # condition: -A*C > 0
            idx = reduce_indices(AC[0])
            conds.append(('cond', idx, AC[1], -AC[2]))
        else:
            conds.append(('unsupported', 'width-4'))
    return conds


def eliminate(conds):
    """Existential elimination of the line-sign vector sigma over the
    tangency conditions; returns the pair of index sets (paper encoding:
    leading -1 for a negative sign) or None when unsupported."""
    if any(c[0] == 'unsupported' for c in conds):
        return None
    real = [c for c in conds if c[0] == 'cond']
    sets = []
    free = []
    for c in real:
        _, idx, sigma, sign = c
        if sigma == (0, 0, 0):
            sets.append((idx, sign))
        else:
            free.append(c)
    if len(free) == 2:
        if free[0][2] == free[1][2]:
            _, i1, s1, g1 = free[0]
            _, i2, s2, g2 = free[1]
            idx = reduce_indices(i1 + i2)
            sets.append((idx, g1 * g2))
        # independent sigmas: both always satisfiable, nothing to add
    elif len(free) == 1:
        pass  # one sigma-dependent condition alone is always satisfiable
    out = []
    for idx, sign in sets:
        enc = ([-1] if sign < 0 else []) + list(idx)
        out.append(tuple(enc))
    while len(out) < 2:
        out.append(tuple())
    return tuple(sorted(out, key=lambda t: (len(t) == 0, t)))


cells = sd.validate_triangulation(S)
lam = sd.interior_weight(cells)
Q = cv.TropicalQuartic(lam, 'min')
classes = oracle.enumerate_bitangent_classes(Q)
print('lam =', lam)
printed = [
    ((-1, 2, 8, 12, 13), (-1, 1, 2, 4, 12)),
    ((-1, 2, 8, 12, 13), (10, 12)),
    ((-1, 2, 8, 12, 13), (10, 12)),
    ((-1, 1, 2, 4, 12), ()),
    ((10, 12), ()),
    ((10, 12), ()),
    ((-1, 1, 2, 4, 10), ()),
]
derived = []
for idx, b in enumerate(classes):
    print(f'--- class {idx}: {b}')
    results = {}
    for dim, p in b.cells:
        conds = tangency_conditions(list(Q.coefficients), p)
        if conds is None:
            continue
        pair = eliminate(conds)
        key = pair if pair is not None else tuple(c for c in conds if c[0] == 'unsupported')
        results.setdefault(key, []).append((dim, p))
    for key, pts in results.items():
        print('   ', key, f'at {len(pts)} cells, e.g. {pts[0]}')
    # pick the condition pair that appears (if unique)
    pairs = [k for k in results if k and isinstance(k[0], tuple) and (not k[0] or isinstance(k[0][0], int))]
    derived.append(pairs)

print()
print('printed multiset:')
for p in sorted(printed): print('  ', p)
