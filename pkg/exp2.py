"""Experiment 2: locate lifting representatives v* per class and dump the
initial-term structure of the restricted polynomial there."""
import sys
sys.path.insert(0, 'src')
from fractions import Fraction
from math import comb
from tropical_quartics import curve as cv, subdivision as sd, oracle, lattice

S = [[0,1,2],[1,2,4],[2,4,12],[4,7,12],[2,8,12],[2,8,13],[8,12,13],[2,5,13],[5,9,13],[9,13,14],[7,11,12],[7,10,11],[4,7,10],[4,6,10],[3,4,6],[1,3,4]]


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


def hull(vals):
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
    return h


def hull_edges(vals):
    h = hull(vals)
    return [(a[0], b[0], Fraction(b[1]-a[1], b[0]-a[0])) for a, b in zip(h, h[1:])]


def structure(lam, v):
    vals = [val_terms(lam, v, i) for i in range(5)]
    edges = hull_edges(vals)
    info = []
    for (i0, i1, sl) in edges:
        if i1 - i0 < 2:
            info.append((i0, i1, sl, None))
            continue
        gaps = []
        for im in range(i0+1, i1):
            expect = vals[i0][0] + (vals[i1][0]-vals[i0][0]) * Fraction(im-i0, i1-i0)
            gaps.append(vals[im][0] - expect)
        info.append((i0, i1, sl, gaps))
    return vals, edges, info


def refine_to_rep(lam, v, maxit=40):
    """Drive the middles of the width-2 hull edges onto the edges."""
    for it in range(maxit):
        vals, edges, info = structure(lam, v)
        wide = [(i0, i1, sl, gaps) for (i0, i1, sl, gaps) in info if i1 - i0 >= 2]
        widths = sorted(i1 - i0 for i0, i1, *_ in wide)
        if widths not in ([2, 2], [4]):
            return None, f'widths {widths}'
        eqs = []
        for (i0, i1, sl, gaps) in wide:
            for j, g in enumerate(gaps):
                if g > 0:
                    im = i0 + 1 + j
                    # gradient of V_i: dominant term (u,k): dV = (-k, u2)
                    def grad(i):
                        _, terms = vals[i]
                        u, k = terms[0]
                        return (-k, lattice.POINTS[u][1])
                    gm, g0, g1 = grad(im), grad(i0), grad(i1)
                    c0 = Fraction(i1 - im, i1 - i0)
                    c1 = Fraction(im - i0, i1 - i0)
                    row = (gm[0] - c0*g0[0] - c1*g1[0], gm[1] - c0*g0[1] - c1*g1[1])
                    eqs.append((row, -g))
        if not eqs:
            return v, 'ok'
        # solve least effort: take up to 2 independent equations
        import itertools
        done = False
        for (r1, b1), (r2, b2) in itertools.combinations(eqs, 2):
            det = r1[0]*r2[1] - r1[1]*r2[0]
            if det != 0:
                dx = Fraction(b1*r2[1] - b2*r1[1], det)
                dy = Fraction(r1[0]*b2 - r2[0]*b1, det)
                v = (v[0] + dx, v[1] + dy)
                done = True
                break
        if not done:
            (r1, b1) = eqs[0]
            # single equation: move along gradient direction
            n2 = r1[0]*r1[0] + r1[1]*r1[1]
            if n2 == 0:
                return None, 'flat eq'
            v = (v[0] + Fraction(b1*r1[0], n2), v[1] + Fraction(b1*r1[1], n2))
    return None, 'no convergence'


def show(lam, v, label):
    vals, edges, info = structure(lam, v)
    print(f'   {label} v*={v}')
    for (i0, i1, sl, gaps) in info:
        if i1 - i0 < 2:
            continue
        print(f'     edge [{i0},{i1}] slope {sl} gaps {gaps}')
        for i in range(i0, i1+1):
            vv, terms = vals[i]
            tstr = []
            for (u, k) in terms:
                u1, u2 = lattice.POINTS[u]
                sig = ((u2-k) % 2, k % 2, u2 % 2)
                tstr.append(f's{u}*C({u2},{k})*(-1)^{u2}*sig{sig}')
            print(f'       r_{i}: V={vv} terms: ' + ' + '.join(tstr))


cells = sd.validate_triangulation(S)
lam = sd.interior_weight(cells)
Q = cv.TropicalQuartic(lam, 'min')
classes = oracle.enumerate_bitangent_classes(Q)
for ci, b in enumerate(classes):
    print(f'=== class {ci}: {b}')
    reps = {}
    for dim, p in b.cells:
        v2, msg = refine_to_rep(list(Q.coefficients), p)
        if v2 is not None:
            reps[v2] = msg
    for v2 in sorted(reps):
        show(list(Q.coefficients), v2, 'rep')
        print()
