"""Derivation of deformation-motif data from the geometric oracle.

For a regular unimodular triangulation and an interior weight, each of the
7 bitangent classes is analyzed:

* real-lifting sign conditions come from the restricted polynomial of the
  lifted line at isolated lifting representatives: every doubled Newton
  polygon edge forces its endpoint initials to have a positive product,
  pinning a sign monomial in the line coefficients; overlap tangencies pin
  the cancelling pair instead.  Consistency of the pin system over all six
  coordinate frames, with the line signs eliminated, yields the conditions
  on the curve's coefficient signs.
* motif triangles are the dual cells swept by the tangencies over the whole
  class, restricted to the stars of the core interior points (those with at
  least two swept triangles).
* hyperplanes are the vertex-alignment functionals (along the three line
  directions) that change the class's geometry somewhere inside the
  secondary cone.

Everything is exact; the derived data ships as data/motif_catalog.json and
is validated against the published fixtures by the test suite.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import comb

from . import census, lattice, linalg, lp, oracle, subdivision
from .curve import TropicalQuartic

INTERIOR = lattice.INTERIOR_INDICES  # (4, 7, 8)


class DerivationError(RuntimeError):
    pass


# ---------------------------------------------------------------------------
# coordinate frames
# ---------------------------------------------------------------------------

def frame_weights_vertex(lam, v, sidx):
    """Weights and line vertex rewritten in the coordinate frame of action
    row sidx (tropical coordinate change permuting homogeneous coords)."""
    inv = lattice.inverse_row(sidx)
    lam2 = [lam[inv[j]] for j in range(15)]
    perm = lattice.COORD_PERMS[sidx]
    X = (Fraction(0), v[0], v[1])
    Xp = (X[perm[0]], X[perm[1]], X[perm[2]])
    return lam2, (Xp[1] - Xp[0], Xp[2] - Xp[0])


def unframe_vertex(v2, sidx):
    perm = lattice.COORD_PERMS[sidx]
    Xp = (Fraction(0), v2[0], v2[1])
    X = [None, None, None]
    for j in range(3):
        X[perm[j]] = Xp[j]
    return (X[1] - X[0], X[2] - X[0])


# ---------------------------------------------------------------------------
# restricted polynomial of the line through v
# ---------------------------------------------------------------------------

def restricted_valuations(lam, v):
    """Per degree i, (valuation, dominant (monomial, k) terms) of the
    x-degree-i coefficient of q(x, y(x)) for the line with vertex v."""
    vx, vy = v
    out = []
    for i in range(5):
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
        out.append((best, terms))
    return out


def lower_hull(vals):
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


def _term_sign(uidx, k):
    """(sigma exponents over (sign alpha, sign beta, sign gamma), sign)."""
    u1, u2 = lattice.POINTS[uidx]
    return ((u2 - k) % 2, k % 2, u2 % 2), (-1 if u2 % 2 else 1)


def _initial_monomial(terms):
    """Initial as a single signed monomial (uidx, sigma, sign), or None."""
    mons = {}
    for uidx, k in terms:
        sigma, gsign = _term_sign(uidx, k)
        key = (uidx, sigma)
        mons[key] = mons.get(key, 0) + gsign * comb(lattice.POINTS[uidx][1], k)
    mons = {kk: c for kk, c in mons.items() if c != 0}
    if len(mons) != 1:
        return None
    (uidx, sigma), coef = next(iter(mons.items()))
    return (uidx, sigma, 1 if coef > 0 else -1)


# ---------------------------------------------------------------------------
# sign pins at a lifting representative
# ---------------------------------------------------------------------------

def _pin(T1, T2, required, inv, perm):
    """Pin sign(T1 * T2) = required, translated to the base frame.

    Squared coefficient signs drop out (s_u^2 = 1), so equal monomials
    leave an empty index part.
    """
    e_frame = tuple((a + b) % 2 for a, b in zip(T1[1], T2[1]))
    sign = T1[2] * T2[2] * required
    s_part = tuple(sorted({inv[T1[0]]} ^ {inv[T2[0]]}))
    e_base = [0, 0, 0]
    for j in range(3):
        e_base[perm[j]] ^= e_frame[j]
    return (tuple(e_base), sign, s_part)


def frame_pins(lam, v, sidx):
    """Sign pins read off from the hull structure in one frame; [] when the
    frame's projection degenerates; None when the structure refutes a lift."""
    lam2, v2 = frame_weights_vertex(lam, v, sidx)
    inv = lattice.inverse_row(sidx)
    perm = lattice.COORD_PERMS[sidx]
    vals = restricted_valuations(lam2, v2)
    edges = lower_hull(vals)
    wide = [(a, b) for a, b in edges if b - a >= 2]
    narrow = [(a, b) for a, b in edges if b - a == 1]
    widths = sorted(b - a for a, b in wide)
    if widths in ([4], [3], [1, 3], [3, 1]):
        return []
    if widths == [2, 2]:
        units = [("edge", a, b) for a, b in wide]
    elif widths == [2]:
        if len(narrow) != 2 or narrow[0][1] != narrow[1][0]:
            return []
        units = [("edge", *wide[0]), ("cancel", narrow[0][1])]
    elif widths == []:
        if len(narrow) != 4:
            return []
        units = [("cancel", 1), ("cancel", 3)]
    else:
        return []
    pins = []
    for unit in units:
        if unit[0] == "edge":
            _, i0, i1 = unit
            if 2 * vals[i0 + 1][0] != vals[i0][0] + vals[i1][0]:
                return None  # middle strictly above: no double root here
            A = _initial_monomial(vals[i0][1])
            C = _initial_monomial(vals[i1][1])
            if A is None or C is None:
                continue  # sum initial: sign tunable, no pin
            if A[0] == C[0]:
                # shared monomial: the endpoint product is a square times an
                # even sigma monomial, always positive, hence no condition
                continue
            pins.append(_pin(A, C, +1, inv, perm))
        else:
            _, i = unit
            terms = vals[i][1]
            if len(terms) != 2:
                continue
            (ua, ka), (ub, kb) = terms
            Ta = (ua, *_term_sign(ua, ka))
            Tb = (ub, *_term_sign(ub, kb))
            pins.append(_pin(Ta, Tb, -1, inv, perm))
            A = _initial_monomial(vals[i - 1][1]) if i >= 1 else None
            C = _initial_monomial(vals[i + 1][1]) if i + 1 <= 4 else None
            if A is not None and C is not None:
                pins.append(_pin(A, C, +1, inv, perm))
    return pins


def conditions_from_pins(pins):
    """Consistency conditions of sigma^e = b(s) over the three line signs."""
    pins = sorted(set(pins))
    conds = set()
    for e, g, p in pins:
        if e == (0, 0, 0):
            conds.add(_encode(g, p))
    for (e1, g1, p1), (e2, g2, p2) in combinations(pins, 2):
        if e1 == e2 and e1 != (0, 0, 0):
            conds.add(_encode(g1 * g2, _sym_diff(p1, p2)))
    for (e1, g1, p1), (e2, g2, p2), (e3, g3, p3) in combinations(pins, 3):
        if all(x != (0, 0, 0) for x in (e1, e2, e3)) and len({e1, e2, e3}) == 3 \
           and tuple((a + b + c) % 2 for a, b, c in zip(e1, e2, e3)) == (0, 0, 0):
            conds.add(_encode(g1 * g2 * g3, _sym_diff(_sym_diff(p1, p2), p3)))
    conds.discard(())
    return conds


def _sym_diff(p1, p2):
    return tuple(sorted(set(p1) ^ set(p2)))


def _encode(sign, idx):
    if not idx:
        return () if sign > 0 else ("contradiction",)
    return tuple(([-1] if sign < 0 else []) + list(idx))


# ---------------------------------------------------------------------------
# lifting representatives
# ---------------------------------------------------------------------------

def _tie_signature(lam, v):
    vals = restricted_valuations(lam, v)
    edges = lower_hull(vals)
    wide = [(a, b) for a, b in edges if b - a >= 2]
    narrow = [(a, b) for a, b in edges if b - a == 1]
    widths = sorted(b - a for a, b in wide)
    sig = []
    if widths == [2, 2]:
        for (i0, i1) in wide:
            if 2 * vals[i0 + 1][0] != vals[i0][0] + vals[i1][0]:
                return None
            sig.append(("edge", i0, tuple(sorted(vals[i0 + 1][1]))))
    elif widths == [2]:
        if len(narrow) != 2 or narrow[0][1] != narrow[1][0]:
            return None
        i = narrow[0][1]
        if len(vals[i][1]) < 2:
            return None
        (i0, i1) = wide[0]
        if 2 * vals[i0 + 1][0] != vals[i0][0] + vals[i1][0]:
            return None
        sig.append(("edge", i0, tuple(sorted(vals[i0 + 1][1]))))
        sig.append(("cancel", i, tuple(sorted(vals[i][1]))))
    elif widths == []:
        if len(narrow) != 4:
            return None
        for i in (1, 3):
            if len(vals[i][1]) < 2:
                return None
            sig.append(("cancel", i, tuple(sorted(vals[i][1]))))
    elif widths == [4]:
        sig.append(("w4", wide[0][0]))
    else:
        return None
    return tuple(sig)


def _signature_all_frames(lam, v):
    out = []
    for sidx in range(6):
        lam2, v2 = frame_weights_vertex(lam, v, sidx)
        out.append(_tie_signature(lam2, v2))
    return tuple(out)


def is_isolated_rep(lam, v):
    """No perturbation direction preserves the tie pattern in every frame."""
    base = _signature_all_frames(lam, v)
    if all(s is None for s in base):
        return False
    slacks = []
    for sidx in range(6):
        lam2, v2 = frame_weights_vertex(lam, v, sidx)
        vals = restricted_valuations(lam2, v2)
        allvals = sorted({w for w, _ in vals})
        slacks.extend(b - a for a, b in zip(allvals, allvals[1:]))
    slacks = [s for s in slacks if s > 0]
    delta = (min(slacks) / 64) if slacks else Fraction(1, 64)
    for d in ((1, 0), (-1, 0), (0, 1), (0, -1), (1, 1), (-1, -1), (1, -1), (-1, 1)):
        w = (v[0] + delta * d[0], v[1] + delta * d[1])
        if _signature_all_frames(lam, w) == base:
            return False
    return True


def refine_to_rep(lam, v, maxit=40):
    """Drive hull middles onto their edges (piecewise-linear Newton)."""
    for _ in range(maxit):
        vals = restricted_valuations(lam, v)
        edges = [e for e in lower_hull(vals) if e[1] - e[0] >= 2]
        widths = sorted(b - a for a, b in edges)
        if widths not in ([2, 2], [4]):
            return None
        eqs = []
        for (i0, i1) in edges:
            for im in range(i0 + 1, i1):
                expect = vals[i0][0] + (vals[i1][0] - vals[i0][0]) * Fraction(im - i0, i1 - i0)
                gap = vals[im][0] - expect
                if gap > 0:
                    def grad(i):
                        u, k = vals[i][1][0]
                        return (-k, lattice.POINTS[u][1])
                    gm, g0, g1 = grad(im), grad(i0), grad(i1)
                    c0 = Fraction(i1 - im, i1 - i0)
                    c1 = Fraction(im - i0, i1 - i0)
                    row = (gm[0] - c0 * g0[0] - c1 * g1[0],
                           gm[1] - c0 * g0[1] - c1 * g1[1])
                    eqs.append((row, -gap))
        if not eqs:
            return v
        stepped = False
        for (r1, b1), (r2, b2) in combinations(eqs, 2):
            det = r1[0] * r2[1] - r1[1] * r2[0]
            if det != 0:
                v = (v[0] + Fraction(b1 * r2[1] - b2 * r1[1], det),
                     v[1] + Fraction(r1[0] * b2 - r2[0] * b1, det))
                stepped = True
                break
        if not stepped:
            (r1, b1) = eqs[0]
            n2 = r1[0] * r1[0] + r1[1] * r1[1]
            if n2 == 0:
                return None
            v = (v[0] + Fraction(b1 * r1[0], n2), v[1] + Fraction(b1 * r1[1], n2))
    return None


def class_representatives(lam, bclass):
    """Isolated lifting representatives reachable from the class's cells."""
    cand = {p for _, p in bclass.cells}
    for dim, p in bclass.cells:
        for sidx in range(6):
            lam2, p2 = frame_weights_vertex(lam, p, sidx)
            v2 = refine_to_rep(lam2, p2)
            if v2 is not None:
                cand.add(unframe_vertex(v2, sidx))
    return [v for v in sorted(cand) if is_isolated_rep(lam, v)]


def class_conditions(lam, bclass):
    """The real-lifting condition sets of one bitangent class.

    Representatives whose pin system is contradictory carry no real lifts
    for any sign vector and contribute nothing.
    """
    reps = class_representatives(lam, bclass)
    union = set()
    for v in reps:
        pins = []
        refuted = False
        for sidx in range(6):
            ps = frame_pins(lam, v, sidx)
            if ps is None:
                refuted = True
                break
            pins.extend(ps)
        if refuted:
            continue
        conds = conditions_from_pins(pins)
        if ("contradiction",) in conds:
            continue
        union |= conds
    return condition_span_reduce(union), reps


def condition_span(conds):
    """F2 span of the conditions (as sign/index-set pairs), identity dropped."""
    basis = [((-1 in c), frozenset(i for i in c if i != -1)) for c in conds]
    span = {(False, frozenset())}
    for neg, idx in basis:
        span |= {(neg ^ n2, idx ^ i2) for n2, i2 in span}
    span.discard((False, frozenset()))
    if (True, frozenset()) in span:
        raise DerivationError("contradictory condition span")
    return frozenset(span)


def _cond_encode(neg, idx):
    return tuple(([-1] if neg else []) + sorted(idx))


def condition_span_reduce(conds):
    """Reduce a redundant condition set to two generators of its span.

    Sets of at most two are kept verbatim (they are what the companion
    data prints); larger sets are e.g. {A, B, A*B} from pins of several
    representatives, and any two generators give the same conjunction."""
    conds = {c for c in conds if c}
    if len(conds) <= 2:
        return set(conds)
    span = condition_span(conds)
    ordered = sorted(span, key=lambda c: (len(c[1]), _cond_encode(*c)))
    picked = []
    covered = {(False, frozenset())}
    for neg, idx in ordered:
        if (neg, idx) in covered:
            continue
        picked.append((neg, idx))
        covered |= {(neg ^ n2, idx ^ i2) for n2, i2 in covered}
        if covered.issuperset(span):
            break
    if len(picked) > 2:
        raise DerivationError("condition span needs more than two generators")
    return {_cond_encode(*c) for c in picked}


# ---------------------------------------------------------------------------
# motif triangles
# ---------------------------------------------------------------------------

def class_motif(cells, bclass):
    """Swept dual triangles restricted to the stars of the core interior
    points (those with >= 2 swept triangles)."""
    tris = set()
    edge_sites = set()
    for sites in bclass.tangencies.values():
        for _, support in sites:
            for kind, data in support:
                if kind == "vertex":
                    tris.add(data)
                else:
                    edge_sites.add(data)
    for e in edge_sites:
        for cell in cells:
            if e[0] in cell and e[1] in cell:
                tris.add(cell)
    core = [p for p in INTERIOR if sum(1 for t in tris if p in t) >= 2]
    if core:
        motif = {t for t in tris if any(p in t for p in core)}
    else:
        motif = tris  # boundary-hugging class: every swept cell is structural
    if not motif:
        raise DerivationError("empty motif")
    return tuple(sorted(motif))


# ---------------------------------------------------------------------------
# hyperplane walls
# ---------------------------------------------------------------------------

def _vertex_funcs(cells):
    return {cell: census.vertex_functionals(cell) for cell in cells}


def normalize_row(row):
    ints = linalg.clear_denominators(row)
    if not any(ints):
        return None
    last = max(i for i, x in enumerate(ints) if x)
    if ints[last] < 0:
        ints = [-x for x in ints]
    return tuple(ints)


def candidate_walls(cells, motif_tris):
    """Alignment functionals between curve vertices of the swept triangles
    along the three line directions, normalized; zero rows dropped."""
    funcs = _vertex_funcs(cells)
    rows = set()
    tris = sorted(motif_tris)
    for t1, t2 in combinations(tris, 2):
        (fx1, fy1), (fx2, fy2) = funcs[t1], funcs[t2]
        for d in ("x", "y", "xy"):
            if d == "x":
                diff = [a - b for a, b in zip(fx1, fx2)]
            elif d == "y":
                diff = [a - b for a, b in zip(fy1, fy2)]
            else:
                diff = [(a - c) - (b - d2) for a, b, c, d2 in
                        zip(fx1, fy1, fx2, fy2)]
            row = normalize_row(diff)
            if row is not None:
                rows.add(row)
    return sorted(rows)


def wall_crosses_cone(cone_rows, row):
    """Whether the wall meets the interior of the secondary cone."""
    pos = lp.strictly_feasible(list(cone_rows) + [list(row)])
    neg = lp.strictly_feasible(list(cone_rows) + [[-x for x in row]])
    return pos and neg


def fingerprint_of(bclass):
    """Intrinsic shape invariant: unboundedness plus the set of distinct
    tangency contact patterns realized along the class (arrangement piece
    counts are refinement artifacts and would flag false walls).  Canonical
    nested tuples so fingerprints compare structurally."""
    patterns = set()
    for sites in bclass.tangencies.values():
        pattern = tuple(
            (m, tuple(sorted(support))) for m, support in sites
        )
        patterns.add(pattern)
    return (bclass.unbounded, tuple(sorted(patterns)))


def derive_classes(cells, lam):
    """Full per-class data for one triangulation at one interior weight."""
    curve = TropicalQuartic(lam, "min")
    if curve.triangulation != lattice.sort_triangles(cells):
        raise DerivationError("weight does not induce the triangulation")
    classes = oracle.enumerate_bitangent_classes(curve)
    if len(classes) != 7:
        raise DerivationError(f"{len(classes)} bitangent classes")
    records = []
    for b in classes:
        conds, reps = class_conditions(list(curve.coefficients), b)
        records.append({
            "conditions": conds,
            "motif": class_motif(cells, b),
            "fingerprint": fingerprint_of(b),
            "class": b,
        })
    return records


def condition_span_key(conds):
    """Canonical generator-independent encoding of a condition system."""
    conds = {c for c in conds if c}
    if not conds:
        return ()
    return tuple(sorted(_cond_encode(*c) for c in condition_span(conds)))


def canonicalize_record(rec):
    """Identity-position form: lexicographic minimum over the S3 orbit of
    (triangles, condition span, walls), triangles first.

    Returns (identity triangles, display conditions, walls, span key); the
    display conditions are the transported reduced set, the span key is what
    type identity and consistency checks compare.
    """
    from . import motifs as motif_mod
    best = None
    for sigma in range(6):
        tris = lattice.apply_to_triangles(sigma, rec["motif"])
        conds_t = motif_mod.transport_condition(tuple(sorted(rec["conditions"])), sigma)
        span_key = condition_span_key(conds_t)
        conds = motif_mod.canonical_conditions(conds_t)
        walls = tuple(sorted(
            normalize_row(motif_mod.transport_row(w, sigma)) for w in rec["walls"]
        ))
        key = (tris, span_key, walls, conds)
        if best is None or key < best:
            best = key
    tris, span_key, walls, conds = best
    return tris, conds, walls, span_key


def match_entries(cells, entries):
    """(name, triangles, sigma) of every catalog pattern inside the cells,
    deduplicated by (name, triangles) keeping the smallest symmetry."""
    cellset = set(lattice.sort_triangles(cells))
    found = {}
    for name in sorted(entries):
        tris0 = entries[name]["triangles"]
        for sigma in range(6):
            tris = lattice.apply_to_triangles(sigma, tris0)
            if not set(tris) <= cellset:
                continue
            key = (name, tris)
            if key not in found:
                found[key] = (name, tris, sigma)
    return sorted(found.values())


_PERTURBATIONS = (
    None,
    (3, 10007),
    (7, 100003),
    (11, 1000003),
)


def derive_triangulation(cells, with_walls=True):
    """Records (conditions, motif, walls) for every class of a triangulation,
    retrying from perturbed interior weights when a sample is degenerate."""
    cells = subdivision.validate_triangulation(cells)
    cone = subdivision.secondary_cone(cells)
    last = None
    for pert in _PERTURBATIONS:
        lam = list(subdivision.interior_weight(cells))
        if pert is not None:
            a, p = pert
            lam = [x + Fraction((a * (i + 1) ** 2) % 97, p) for i, x in enumerate(lam)]
            if subdivision.subdivision_from_weights(lam) != cells:
                continue
        try:
            records = derive_classes(cells, lam)
            if not with_walls:
                return [
                    {"conditions": r["conditions"], "motif": r["motif"], "walls": ()}
                    for r in records
                ]
            return sweep_chambers(cells, cone, records)
        except (DerivationError, ArithmeticError, AssertionError) as exc:
            last = exc
    raise DerivationError(f"no usable weight for derivation: {last}")


def _derive_worker(cells):
    try:
        return cells, derive_triangulation(cells), None
    except Exception as exc:  # collected and reported by the crawl
        return cells, None, repr(exc)


def build_entries(census_cells, processes=1, log=None, priority=()):
    """Crawl the census, deriving data for every triangulation the current
    catalog cannot explain, until every one matches exactly 7 motifs.

    Returns (entries, failures) where failures maps cells to error strings.
    """
    log = log or (lambda *a: None)
    order = [subdivision.validate_triangulation(c) for c in priority]
    order += [c for c in census_cells if c not in set(order)]
    entries = {}
    ident_index = {}
    failures = {}

    def integrate(cells, records):
        for rec in records:
            tris, conds, walls, span_key = canonicalize_record(rec)
            if tris in ident_index:
                name = ident_index[tris]
                entry = entries[name]
                if entry["span_key"] != span_key:
                    raise DerivationError(
                        f"type {name}: conditions differ between occurrences: "
                        f"{entry['span_key']} vs {span_key}"
                    )
                if entry["hyperplanes"] != walls:
                    # walls are detected empirically; keep the richer set but
                    # record the disagreement for the report
                    merged = tuple(sorted(set(entry["hyperplanes"]) | set(walls)))
                    entry["hyperplanes"] = merged
                    entry.setdefault("wall_variants", set()).add(walls)
            else:
                from .motifs import DLO_IDENTITY_TRIANGLES
                name = "DLO" if tris == DLO_IDENTITY_TRIANGLES else f"M{len(entries):03d}"
                ident_index[tris] = name
                entries[name] = {
                    "triangles": tris,
                    "conditions": conds,
                    "hyperplanes": walls,
                    "shapes": {},
                    "span_key": span_key,
                }

    pending = list(order)
    round_no = 0
    while True:
        unmatched = [c for c in pending if len(match_entries(c, entries)) != 7]
        if not unmatched:
            break
        round_no += 1
        batch = unmatched[: max(processes * 2, 8)]
        log(f"round {round_no}: {len(unmatched)} unmatched, deriving {len(batch)}")
        if processes > 1:
            import multiprocessing as mp
            with mp.Pool(processes) as pool:
                results = pool.map(_derive_worker, batch)
        else:
            results = [_derive_worker(c) for c in batch]
        progressed = False
        for cells, records, err in results:
            if err is not None:
                failures[cells] = err
                pending = [c for c in pending if c != cells]
                log(f"  derivation failed: {err}")
                continue
            integrate(cells, records)
            progressed = True
        if not progressed and not any(r[2] is None for r in results):
            break
        log(f"  catalog now has {len(entries)} types")
    for entry in entries.values():
        entry.pop("wall_variants", None)
        entry.pop("span_key", None)
    return entries, failures


def _match_records(recs_a, recs_b):
    """Pair records of two derivations of the same triangulation.

    Condition spans are chamber-invariant, so group by them when possible;
    inside a group (or globally, when spans disagree due to a degenerate
    sample) pair greedily by largest motif overlap.
    """
    def span_of(r):
        return condition_span_key(r["conditions"])

    by_cond_a = {}
    by_cond_b = {}
    for r in recs_a:
        by_cond_a.setdefault(span_of(r), []).append(r)
    for r in recs_b:
        by_cond_b.setdefault(span_of(r), []).append(r)
    groups = []
    if sorted(by_cond_a) == sorted(by_cond_b) and all(
        len(by_cond_a[k]) == len(by_cond_b[k]) for k in by_cond_a
    ):
        groups = [(by_cond_a[k], by_cond_b[k]) for k in by_cond_a]
    else:
        groups = [(list(recs_a), list(recs_b))]
    pairs = []
    for group_a, group_b in groups:
        remaining = list(group_b)
        for ra in group_a:
            best = max(
                remaining,
                key=lambda rb: len(set(ra["motif"]) & set(rb["motif"])),
            )
            remaining.remove(best)
            pairs.append((ra, best))
    return pairs


def sweep_chambers(cells, cone_rows, records0):
    """Walls and chamber-union motifs for every class of one triangulation.

    Detects the true shape walls among the candidate alignment functionals,
    then unions each class's swept motif over all chambers of its walls.
    Returns a list of final records (conditions, motif, walls) aligned with
    records0.
    """
    candidates = set()
    for rec in records0:
        candidates.update(candidate_walls(cells, rec["motif"]))
    crossing = [r for r in sorted(candidates) if wall_crosses_cone(cone_rows, r)]
    n = len(records0)
    walls = [set() for _ in range(n)]
    motifs = [set(rec["motif"]) for rec in records0]
    side_cache = {}

    def derive_at(extra_rows):
        key = tuple(sorted(extra_rows))
        if key not in side_cache:
            lam = lp.feasible_point(list(cone_rows) + [list(r) for r in extra_rows])
            side_cache[key] = None if lam is None else derive_classes(cells, lam)
        return side_cache[key]

    for row in crossing:
        neg = tuple(-x for x in row)
        recs_p = derive_at((row,))
        recs_m = derive_at((neg,))
        if recs_p is None or recs_m is None:
            continue
        pairs = _match_records(recs_p, recs_m)
        base_pairs = _match_records(records0, recs_p)
        base_index = {id(r0): i for i, r0 in enumerate(records0)}
        to_base = {id(rp): base_index[id(r0)] for r0, rp in base_pairs}
        for rp, rm in pairs:
            idx = to_base[id(rp)]
            if rp["fingerprint"] != rm["fingerprint"]:
                walls[idx].add(row)
    # The deformation motif is what the class sweeps in every chamber of its
    # walls: incidental contacts (structures borrowed from other parts of the
    # triangulation in one chamber) drop out under intersection.
    for idx in range(n):
        own = sorted(walls[idx])
        if not own:
            continue
        patterns = [()]
        for row in own:
            patterns = [p + (s,) for p in patterns for s in (1, -1)]
        base_index = {id(r0): i for i, r0 in enumerate(records0)}
        for pattern in patterns:
            extra = tuple(
                tuple(s * x for x in row) for s, row in zip(pattern, own)
            )
            recs = derive_at(extra)
            if recs is None:
                continue
            matched = _match_records(records0, recs)
            for r0, rc in matched:
                if base_index[id(r0)] == idx:
                    motifs[idx] &= set(rc["motif"])
    out = []
    for rec, motif, wset in zip(records0, motifs, walls):
        out.append({
            "conditions": rec["conditions"],
            "motif": tuple(sorted(motif)),
            "walls": tuple(sorted(wset)),
        })
    return out
