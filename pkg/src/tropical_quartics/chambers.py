"""Chamber decompositions of secondary cones by motif hyperplanes.

A chamber is a maximal region of constant hyperplane sign pattern inside
the cone; bitangent shapes are constant on chambers.  Patterns are grown
sign by sign with exact LP pruning, so only feasible prefixes are explored.
"""

from __future__ import annotations

from fractions import Fraction

from . import linalg, lp, oracle, subdivision
from .curve import TropicalQuartic


class Chamber:
    __slots__ = ("sign_pattern", "rows", "dimension", "interior_point")

    def __init__(self, sign_pattern, rows, dimension, interior_point):
        self.sign_pattern = sign_pattern      # tuple over the hyperplanes
        self.rows = rows                      # cone rows + signed hyperplanes
        self.dimension = dimension            # 15 for full-dimensional
        self.interior_point = interior_point

    def __repr__(self):
        pat = "".join("+" if s > 0 else "-" for s in self.sign_pattern)
        return f"Chamber({pat}, dim={self.dimension})"


class ChamberDecomposition:
    def __init__(self, hyperplanes, chambers, lineality_dimension=3):
        self.hyperplanes = hyperplanes
        self.chambers = chambers
        self.lineality_dimension = lineality_dimension

    def __len__(self):
        return len(self.chambers)


def relative_interior_point(rows, bound: int = 1):
    """Exact rational point with every inequality strict, scaled to small
    integers; None when the system has no interior."""
    t, x = lp.max_slack(rows, bound=bound)
    if t is None or t <= 0:
        return None
    ints = linalg.clear_denominators(x)
    return tuple(Fraction(v) for v in ints)


def chamber_decomposition(cone_rows, hyperplanes) -> ChamberDecomposition:
    """Full-dimensional chambers of the cone cut by the hyperplanes."""
    cone_rows = [tuple(r) for r in cone_rows]
    hyperplanes = [tuple(h) for h in hyperplanes]
    if not hyperplanes:
        point = relative_interior_point(cone_rows)
        if point is None:
            return ChamberDecomposition((), [])
        return ChamberDecomposition(
            (), [Chamber((), tuple(cone_rows), 15, point)]
        )
    partial = [((), list(cone_rows))]
    for h in hyperplanes:
        grown = []
        for pattern, rows in partial:
            for sign in (1, -1):
                cand = rows + [tuple(sign * x for x in h)]
                if lp.strictly_feasible(cand):
                    grown.append((pattern + (sign,), cand))
        partial = grown
    chambers = []
    for pattern, rows in partial:
        point = relative_interior_point(rows)
        chambers.append(Chamber(pattern, tuple(rows), 15, point))
    return ChamberDecomposition(tuple(hyperplanes), chambers)


def shape_report(cells, catalog, cross_check_oracle=False):
    """Per motif of the triangulation: its chamber decomposition with a
    sign-pattern shape per chamber (letters when the catalog carries naming
    tables, the pattern string otherwise).

    With cross_check_oracle, each chamber's interior point is also run
    through the geometric oracle and the class fingerprints are attached.
    """
    cells = subdivision.validate_triangulation(cells)
    cone = subdivision.secondary_cone(cells)
    found = catalog.find_all_motifs(cells)
    report = []
    for motif in found:
        decomposition = chamber_decomposition(cone, motif.hyperplanes)
        rows = []
        for chamber in decomposition.chambers:
            pattern = "".join(
                "+" if s > 0 else "-" for s in chamber.sign_pattern
            )
            shape = catalog.shape_letter(motif.type_name, pattern)
            entry = {
                "pattern": pattern,
                "dimension": chamber.dimension,
                "point": chamber.interior_point,
                "shape": shape,
            }
            if cross_check_oracle and chamber.interior_point is not None:
                curve = TropicalQuartic(chamber.interior_point, "min")
                classes = oracle.enumerate_bitangent_classes(curve)
                entry["oracle_fingerprints"] = sorted(
                    oracle.class_fingerprint(b) for b in classes
                )
            rows.append(entry)
        report.append({"motif": motif, "chambers": rows})
    return report


def shapes_at(coefficients, convention, catalog):
    """Shape assignment of each motif at one coefficient vector: evaluate
    the transported hyperplanes, look the sign pattern up per motif."""
    curve = TropicalQuartic(coefficients, convention)
    cells = curve.triangulation
    heights = (
        list(curve.coefficients) if convention == "min"
        else [-c for c in curve.coefficients]
    )
    found = catalog.find_all_motifs(cells)
    out = []
    for motif in found:
        signs = []
        for row in motif.hyperplanes:
            v = sum(r * h for r, h in zip(row, heights))
            signs.append("+" if v > 0 else ("-" if v < 0 else "0"))
        pattern = "".join(signs)
        out.append((motif, pattern, catalog.shape_letter(motif.type_name, pattern)))
    return out
