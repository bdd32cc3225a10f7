"""Experiment 3: sign-pin system over all six coordinate frames."""
import sys
sys.path.insert(0, 'src')
from fractions import Fraction
from itertools import product, combinations
from math import comb
from tropical_quartics import curve as cv, subdivision as sd, oracle, lattice

S = [[0,1,2],[1,2,4],[2,4,12],[4,7,12],[2,8,12],[2,8,13],[8,12,13],[2,5,13],[5,9,13],[9,13,14],[7,11,12],[7,10,11],[4,7,10],[4,6,10],[3,4,6],[1,3,4]]

# coordinate permutation for each action-table row: row i sends point with
# homogenized coords h to the point with coords (h[p[0]], h[p[1]], h[p[2]])
def coord_perm_of_row(row):
    hom = [lattice.homogenize(p) for p in lattice.POINTS]
    for perm in product(range(3), repeat=3):
        if len(set(perm)) != 3:
            continue
        ok = all(
            lattice.INDEX_OF_POINT[(hom[i][perm[1]], hom[i][perm[2]])] == row[i]
            for i in range(15)
        )
        if ok:
            return perm
    raise AssertionError

COORD_PERMS = [coord_perm_of_row(r) for r in lattice.ACTION_TABLE]


def frame_data(lam, v, sigma_idx):
    """(lam', v') in the coordinate frame of action row sigma_idx."""
    row = lattice.ACTION_TABLE[sigma_idx]
    inv = [row.index(j) for j in range(15)]
    lam2 = [lam[inv[j]] for j in range(15)]
    perm = COORD_PERMS[sigma_idx]
    X = (Fraction(0), v[0], v[1])
    Xp = (X[perm[0]], X[perm[1]], X[perm[2]])
    v2 = (Xp[1] - Xp[0], Xp[2] - Xp[0])
    return lam2, v2


def val_terms(lam, v, i):
    vx, vy = v
    best, terms = None, []
    for uidx, (u1, u2) in enumerate(lattice.POINTS):
        k = i - u1
        if k < 0 or k > u2:
            continue
        val = lam[uidx] - k * vx + u2 * vy
        if best is None or val < best:
            best, terms = val, [(uidx, k)]
        elif val == best:
            terms.append((uidx, k))
    return best, terms


def hull_edges(vals):
    pts = [(i, v) for i, (v, _) in enumerate(vals)]
    h = []
    for p in pts:
        while len(h) >= 2:
            (x1, y1), (x2, y2) = h[-2], h[-1]
            if (y2 - y1) * (p[0] - x1) >= (p[1] - y1) * (x2 - x1):
                h.pop()
            else:
                break
        h.append(p)
    return [(a[0], b[0]) for a, b in zip(h, h[1:])]


def monomial_of(terms):
    """Initial as one signed monomial: (s_index tuple, sigma exps, sign) or
    'square' marker when all terms share one u (perfect powers), else None."""
    mons = {}
    for uidx, k in terms:
        u1, u2 = lattice.POINTS[uidx]
        sigma = ((u2 - k) % 2, k % 2, u2 % 2)
        sign = -1 if u2 % 2 else 1
        key = (uidx, sigma)
        mons[key] = mons.get(key, 0) + sign * comb(u2, k)
    mons = {k: c for k, c in mons.items() if c != 0}
    if len(mons) != 1:
        return None
    (uidx, sigma), coef = next(iter(mons.items()))
    return (uidx, sigma, 1 if coef > 0 else -1)


def frame_pins(lam, v, sigma_idx):
    """Sign pins sigma^e = b(s) from the hull structure in one frame.

    Returns (pins, flags): pins are (e in F2^3 base frame, sign, s-index pair),
    flags notes anomalies.
    """
    lam2, v2 = frame_data(lam, v, sigma_idx)
    vals = [val_terms(lam2, v2, i) for i in range(5)]
    edges = [e for e in hull_edges(vals) if e[1] - e[0] >= 2]
    widths = sorted(e[1] - e[0] for e in edges)
    flags = []
    pins = []
    if widths not in ([2, 2], [4]):
        return None, [f'widths{widths}']
    row = lattice.ACTION_TABLE[sigma_idx]
    perm = COORD_PERMS[sigma_idx]
    for (i0, i1) in edges:
        if i1 - i0 == 4:
            flags.append('w4')
            continue
        # middle must be on the edge for a double root
        mid_on = 2 * vals[i0+1][0] == vals[i0][0] + vals[i1][0] if vals[i0+1][0] is not None else False
        if not mid_on:
            flags.append('mid-above')
            continue
        A = monomial_of(vals[i0][1])
        C = monomial_of(vals[i1][1])
        Bm = monomial_of(vals[i0+1][1])
        if A is None or C is None:
            flags.append('sum-AC')
            continue
        if A[0] == C[0] and (Bm is not None and Bm[0] == A[0]):
            continue  # single-monomial perfect square: free tangency
        # pin: sign(A*C) = +1
        e_frame = tuple((a + b) % 2 for a, b in zip(A[1], C[1]))
        sign = A[2] * C[2]
        sidx = []
        for u in (A[0], C[0]):
            sidx.append(row[u] if False else None)
        # translate s-indices and sigma exponents back to the base frame
        s_pair = tuple(sorted((row.index(A[0]) if False else A[0], C[0])))
        # s-index in base frame: lam2[j] = lam[inv[j]] so frame index j is base inv[j]
        inv = [row.index(j) for j in range(15)]
        s_pair = tuple(sorted((inv[A[0]], inv[C[0]])))
        e_base = [0, 0, 0]
        for j in range(3):
            e_base[perm[j]] ^= e_frame[j]
        pins.append((tuple(e_base), sign, s_pair))
    return pins, flags


def conditions_from_pins(all_pins):
    """Consistency conditions of the pin system sigma^e = b over F2^3."""
    # dedupe pins
    pins = sorted(set(all_pins))
    conds = set()
    # single pins with e == 0
    for e, sign, s_pair in pins:
        if e == (0, 0, 0):
            conds.add(_encode(sign, s_pair))
    # pairwise dependencies e1 == e2 (nonzero)
    for (e1, g1, p1), (e2, g2, p2) in combinations(pins, 2):
        if e1 == e2 and e1 != (0, 0, 0):
            conds.add(_encode(g1 * g2, _xor(p1, p2)))
    # triple dependencies e1+e2+e3 = 0, all nonzero, pairwise distinct
    for (e1, g1, p1), (e2, g2, p2), (e3, g3, p3) in combinations(pins, 3):
        if e1 != e2 and e2 != e3 and e1 != e3 and \
           all(x != (0,0,0) for x in (e1,e2,e3)) and \
           tuple((a+b+c) % 2 for a,b,c in zip(e1,e2,e3)) == (0,0,0):
            conds.add(_encode(g1*g2*g3, _xor(_xor(p1, p2), p3)))
    return conds


def _xor(p1, p2):
    out = set(p1) ^ set(p2)
    return tuple(sorted(out))


def _encode(sign, idx):
    return tuple(([-1] if sign < 0 else []) + list(idx))


def refine_to_rep(lam, v, maxit=40):
    for it in range(maxit):
        vals = [val_terms(lam, v, i) for i in range(5)]
        edges = [e for e in hull_edges(vals) if e[1] - e[0] >= 2]
        widths = sorted(e[1] - e[0] for e in edges)
        if widths not in ([2, 2], [4]):
            return None
        eqs = []
        for (i0, i1) in edges:
            for im in range(i0 + 1, i1):
                expect = vals[i0][0] + (vals[i1][0] - vals[i0][0]) * Fraction(im - i0, i1 - i0)
                g = vals[im][0] - expect
                if g > 0:
                    def grad(i):
                        u, k = vals[i][1][0]
                        return (-k, lattice.POINTS[u][1])
                    gm, g0, g1 = grad(im), grad(i0), grad(i1)
                    c0 = Fraction(i1 - im, i1 - i0)
                    c1 = Fraction(im - i0, i1 - i0)
                    row = (gm[0] - c0 * g0[0] - c1 * g1[0], gm[1] - c0 * g0[1] - c1 * g1[1])
                    eqs.append((row, -g))
        if not eqs:
            return v
        done = False
        for (r1, b1), (r2, b2) in combinations(eqs, 2):
            det = r1[0] * r2[1] - r1[1] * r2[0]
            if det != 0:
                v = (v[0] + Fraction(b1 * r2[1] - b2 * r1[1], det),
                     v[1] + Fraction(r1[0] * b2 - r2[0] * b1, det))
                done = True
                break
        if not done:
            (r1, b1) = eqs[0]
            n2 = r1[0] * r1[0] + r1[1] * r1[1]
            if n2 == 0:
                return None
            v = (v[0] + Fraction(b1 * r1[0], n2), v[1] + Fraction(b1 * r1[1], n2))
    return None


cells = sd.validate_triangulation(S)
lam = list(sd.interior_weight(cells))
Q = cv.TropicalQuartic(lam, 'min')
classes = oracle.enumerate_bitangent_classes(Q)
printed = sorted([
    ((-1, 2, 8, 12, 13), (-1, 1, 2, 4, 12)),
    ((-1, 2, 8, 12, 13), (10, 12)),
    ((-1, 2, 8, 12, 13), (10, 12)),
    ((-1, 1, 2, 4, 12), ()),
    ((10, 12), ()),
    ((10, 12), ()),
    ((-1, 1, 2, 4, 10), ()),
])
derived_pairs = []
for ci, b in enumerate(classes):
    # reps: refine from every cell in every frame, collect distinct v*
    reps = set()
    for dim, p in b.cells:
        for sidx in range(6):
            lam2, p2 = frame_data(lam, p, sidx)
            v2 = refine_to_rep(lam2, p2)
            if v2 is not None:
                # map back to base frame: apply inverse coordinate transform
                perm = COORD_PERMS[sidx]
                Xp = (Fraction(0), v2[0], v2[1])
                X = [None, None, None]
                for j in range(3):
                    X[perm[j]] = Xp[j]
                base = (X[1] - X[0], X[2] - X[0])
                reps.add(base)
    all_pins = []
    all_flags = []
    for v2 in sorted(reps):
        for sidx in range(6):
            pins, flags = frame_pins(lam, v2, sidx)
            if pins is not None:
                all_pins.extend(pins)
            all_flags.extend(flags)
    conds = conditions_from_pins(all_pins)
    print(f'=== class {ci}: {b}  reps={sorted(reps)}')
    print('   pins:', sorted(set(all_pins)))
    print('   flags:', sorted(set(all_flags)))
    print('   conds:', sorted(conds))
    derived_pairs.append(sorted(conds))

print()
print('printed:', printed)
