"""Experiment 4: full pin model (edge pins + cancellation pins), rep filter."""
import sys
sys.path.insert(0, 'src')
from fractions import Fraction
from itertools import product, combinations
from math import comb
from tropical_quartics import curve as cv, subdivision as sd, oracle, lattice

S = [[0,1,2],[1,2,4],[2,4,12],[4,7,12],[2,8,12],[2,8,13],[8,12,13],[2,5,13],[5,9,13],[9,13,14],[7,11,12],[7,10,11],[4,7,10],[4,6,10],[3,4,6],[1,3,4]]


def coord_perm_of_row(row):
    hom = [lattice.homogenize(p) for p in lattice.POINTS]
    for perm in product(range(3), repeat=3):
        if len(set(perm)) != 3:
            continue
        if all(lattice.INDEX_OF_POINT[(hom[i][perm[1]], hom[i][perm[2]])] == row[i]
               for i in range(15)):
            return perm
    raise AssertionError

COORD_PERMS = [coord_perm_of_row(r) for r in lattice.ACTION_TABLE]


def frame_data(lam, v, sidx):
    row = lattice.ACTION_TABLE[sidx]
    inv = [row.index(j) for j in range(15)]
    lam2 = [lam[inv[j]] for j in range(15)]
    perm = COORD_PERMS[sidx]
    X = (Fraction(0), v[0], v[1])
    Xp = (X[perm[0]], X[perm[1]], X[perm[2]])
    return lam2, (Xp[1] - Xp[0], Xp[2] - Xp[0]), row, inv, perm


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


def term_data(uidx, k):
    u1, u2 = lattice.POINTS[uidx]
    sigma = ((u2 - k) % 2, k % 2, u2 % 2)
    gsign = -1 if u2 % 2 else 1
    return sigma, gsign


def monomial_of(terms):
    mons = {}
    for uidx, k in terms:
        sigma, gsign = term_data(uidx, k)
        key = (uidx, sigma)
        mons[key] = mons.get(key, 0) + gsign * comb(lattice.POINTS[uidx][1], k)
    mons = {kk: c for kk, c in mons.items() if c != 0}
    if len(mons) != 1:
        return None
    (uidx, sigma), coef = next(iter(mons.items()))
    return (uidx, sigma, 1 if coef > 0 else -1)


def extract_pins(lam, v, sidx):
    """Resolve the hull into two tangency units; return pins in base frame,
    or None when the structure cannot host a bitangent lift here."""
    lam2, v2, row, inv, perm = frame_data(lam, v, sidx)
    vals = [val_terms(lam2, v2, i) for i in range(5)]
    edges = hull_edges(vals)
    units = []   # ('edge', i0, i1) or ('cancel', i)
    i = 0
    wide = [(a, b) for a, b in edges if b - a >= 2]
    narrow = [(a, b) for a, b in edges if b - a == 1]
    widths = sorted(b - a for a, b in wide)
    if widths == [4]:
        return [], 'w4skip'
    if widths in ([3], [1, 3], [3, 1]):
        return [], 'w3skip'
    if widths == [2, 2]:
        units = [('edge', a, b) for a, b in wide]
    elif widths == [2]:
        # one cancellation among the two narrow edges' shared vertex
        if len(narrow) != 2:
            return [], 'shapeskip'
        (a1, b1), (a2, b2) = narrow
        if b1 != a2:
            return [], 'shapeskip'
        units = [('edge', *wide[0]), ('cancel', b1)]
    elif widths == []:
        # two cancellations: narrow edges [0,1],[1,2],[2,3],[3,4]:
        # cancel at 1 and 3
        if len(narrow) != 4:
            return [], 'shapeskip'
        units = [('cancel', 1), ('cancel', 3)]
    else:
        return [], 'shapeskip'
    pins = []
    for unit in units:
        if unit[0] == 'edge':
            _, i0, i1 = unit
            mid_on = 2 * vals[i0+1][0] == vals[i0][0] + vals[i1][0]
            if not mid_on:
                return None, 'mid-above'
            A = monomial_of(vals[i0][1])
            C = monomial_of(vals[i1][1])
            Bm = monomial_of(vals[i0+1][1])
            if A is not None and C is not None and Bm is not None and \
               A[0] == C[0] == Bm[0]:
                continue  # perfect square, free
            if A is None or C is None:
                continue  # tunable sign, no pin
            pins.append(_pin(A, C, +1, inv, perm))
        else:
            _, i = unit
            terms = vals[i][1]
            if len(terms) != 2:
                return [], 'cancelskip'
            (u1_, k1), (u2_, k2) = terms
            T1 = (u1_, term_data(u1_, k1)[0], term_data(u1_, k1)[1])
            T2 = (u2_, term_data(u2_, k2)[0], term_data(u2_, k2)[1])
            pins.append(_pin(T1, T2, -1, inv, perm))
            A = monomial_of(vals[i-1][1]) if i >= 1 else None
            C = monomial_of(vals[i+1][1]) if i + 1 <= 4 else None
            if A is not None and C is not None:
                pins.append(_pin(A, C, +1, inv, perm))
    return pins, None


def _pin(T1, T2, required, inv, perm):
    """sign(T1*T2) = required; translate to base frame."""
    e_frame = tuple((a + b) % 2 for a, b in zip(T1[1], T2[1]))
    sign = T1[2] * T2[2] * required
    s_pair = tuple(sorted((inv[T1[0]], inv[T2[0]])))
    e_base = [0, 0, 0]
    for j in range(3):
        e_base[perm[j]] ^= e_frame[j]
    # pin: sigma^e_base * sign * s_pair-product = +1
    return (tuple(e_base), sign, s_pair)


def conditions_from_pins(pins):
    pins = sorted(set(pins))
    conds = set()
    for e, g, p in pins:
        if e == (0, 0, 0):
            conds.add(_encode(g, p))
    for (e1, g1, p1), (e2, g2, p2) in combinations(pins, 2):
        if e1 == e2 and e1 != (0, 0, 0):
            conds.add(_encode(g1 * g2, _xor(p1, p2)))
    for (e1, g1, p1), (e2, g2, p2), (e3, g3, p3) in combinations(pins, 3):
        if all(x != (0, 0, 0) for x in (e1, e2, e3)) and \
           len({e1, e2, e3}) == 3 and \
           tuple((a + b + c) % 2 for a, b, c in zip(e1, e2, e3)) == (0, 0, 0):
            conds.add(_encode(g1 * g2 * g3, _xor(_xor(p1, p2), p3)))
    conds.discard(())
    return conds


def _xor(p1, p2):
    return tuple(sorted(set(p1) ^ set(p2)))


def _encode(sign, idx):
    if not idx:
        return () if sign > 0 else ('CONTRADICTION',)
    return tuple(([-1] if sign < 0 else []) + list(idx))


def refine_to_rep(lam, v, maxit=40):
    for it in range(maxit):
        vals = [val_terms(lam, v, i) for i in range(5)]
        edges = [e for e in hull_edges(vals) if e[1] - e[0] >= 2]
        widths = sorted(b - a for a, b in edges)
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
                    rown = (gm[0] - c0 * g0[0] - c1 * g1[0], gm[1] - c0 * g0[1] - c1 * g1[1])
                    eqs.append((rown, -g))
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


def tie_signature(lam, v):
    """The liftable tie pattern at v in one frame, or None.

    Includes the tied monomials so a drifting tie does not masquerade as a
    persistent one."""
    vals = [val_terms(lam, v, i) for i in range(5)]
    edges = hull_edges(vals)
    wide = [(a, b) for a, b in edges if b - a >= 2]
    narrow = [(a, b) for a, b in edges if b - a == 1]
    widths = sorted(b - a for a, b in wide)
    sig = []
    if widths == [2, 2]:
        for (i0, i1) in wide:
            if 2 * vals[i0+1][0] != vals[i0][0] + vals[i1][0]:
                return None
            sig.append(('edge', i0, tuple(sorted(vals[i0+1][1]))))
    elif widths == [2]:
        if len(narrow) != 2 or narrow[0][1] != narrow[1][0]:
            return None
        i = narrow[0][1]
        if len(vals[i][1]) < 2:
            return None
        if 2 * vals[wide[0][0]+1][0] != vals[wide[0][0]][0] + vals[wide[0][1]][0]:
            return None
        sig.append(('edge', wide[0][0], tuple(sorted(vals[wide[0][0]+1][1]))))
        sig.append(('cancel', i, tuple(sorted(vals[i][1]))))
    elif widths == []:
        if len(narrow) != 4:
            return None
        for i in (1, 3):
            if len(vals[i][1]) < 2:
                return None
            sig.append(('cancel', i, tuple(sorted(vals[i][1]))))
    elif widths == [4]:
        sig.append(('w4', wide[0][0]))
    else:
        return None
    return tuple(sig)


def _signature_all_frames(lam, v):
    sig = []
    for sidx in range(6):
        lam2, v2, row, inv, perm = frame_data(lam, v, sidx)
        sig.append(tie_signature(lam2, v2))
    return tuple(sig)


def is_isolated_rep(lam, v):
    """No perturbation direction preserves the tie pattern in every frame."""
    base = _signature_all_frames(lam, v)
    if all(s is None for s in base):
        return False
    slacks = []
    for sidx in range(6):
        lam2, v2, _, _, _ = frame_data(lam, v, sidx)
        vals = [val_terms(lam2, v2, i) for i in range(5)]
        allvals = sorted({w for w, _ in vals})
        slacks.extend(b - a for a, b in zip(allvals, allvals[1:]))
    slacks = [s for s in slacks if s > 0]
    delta = (min(slacks) if slacks else Fraction(1)) / 64
    if delta == 0:
        delta = Fraction(1, 64)
    for d in ((1,0),(-1,0),(0,1),(0,-1),(1,1),(-1,-1),(1,-1),(-1,1)):
        w = (v[0] + delta*d[0], v[1] + delta*d[1])
        if _signature_all_frames(lam, w) == base:
            return False
    return True


def class_conditions(lam, bclass):
    cand = {p for _, p in bclass.cells}
    for dim, p in bclass.cells:
        for sidx in range(6):
            lam2, p2, row, inv, perm = frame_data(lam, p, sidx)
            v2 = refine_to_rep(lam2, p2)
            if v2 is not None:
                Xp = (Fraction(0), v2[0], v2[1])
                X = [None] * 3
                for j in range(3):
                    X[perm[j]] = Xp[j]
                cand.add((X[1] - X[0], X[2] - X[0]))
    per_rep = {}
    for v in sorted(cand):
        if not is_isolated_rep(lam, v):
            continue
        pins = []
        ok = True
        msgs = []
        for sidx in range(6):
            ps, msg = extract_pins(lam, v, sidx)
            if ps is None:
                ok = False
                msgs.append(msg)
                break
            pins.extend(ps)
        if ok:
            per_rep[v] = conditions_from_pins(pins)
    return per_rep


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
all_pairs = []
for ci, b in enumerate(classes):
    per_rep = class_conditions(lam, b)
    union = set()
    for v, conds in sorted(per_rep.items()):
        union |= conds
    print(f'=== class {ci}: {b}')
    for v, conds in sorted(per_rep.items()):
        print(f'    rep {v}: {sorted(conds)}')
    print(f'    class conditions: {sorted(union)}')
    pair = tuple(sorted(union, key=lambda t: (len(t), t)))
    all_pairs.append(pair)
print()
print('derived multiset:')
for p in sorted(all_pairs): print('  ', p)
print('printed multiset:')
for p in printed: print('  ', p)
