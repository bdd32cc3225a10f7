"""Static SVG plots of tropical quartics and lines.

Exact vertex coordinates are embedded as metadata comments so plots stay
auditable; the drawing itself uses floats only for layout.
"""

from __future__ import annotations

from fractions import Fraction

from .curve import TropicalLine, TropicalQuartic

_RAY_REACH = Fraction(3)


def _extent(curve, line=None):
    xs, ys = [], []
    for v in curve.vertices.values():
        xs.append(v[0])
        ys.append(v[1])
    if line is not None:
        xs.append(line.vertex[0])
        ys.append(line.vertex[1])
    pad = max(max(xs) - min(xs), max(ys) - min(ys), 1) / 4 + _RAY_REACH
    return min(xs) - pad, max(xs) + pad, min(ys) - pad, max(ys) + pad


def _segments(pieces, xmin, xmax, ymin, ymax):
    reach = max(xmax - xmin, ymax - ymin)
    for piece in pieces:
        p = piece.base
        q = piece.head
        if q is None:
            q = (
                p[0] + reach * piece.direction[0],
                p[1] + reach * piece.direction[1],
            )
        yield p, q


def render_svg(curve: TropicalQuartic, line: TropicalLine | None = None,
               width: int = 640) -> str:
    xmin, xmax, ymin, ymax = _extent(curve, line)
    scale = width / float(xmax - xmin)
    height = int(float(ymax - ymin) * scale) + 1

    def to_px(p):
        x = (float(p[0]) - float(xmin)) * scale
        y = (float(ymax) - float(p[1])) * scale
        return f"{x:.2f},{y:.2f}"

    rows = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" '
        f'height="{height}" viewBox="0 0 {width} {height}">',
        f"<!-- viewport x:[{xmin},{xmax}] y:[{ymin},{ymax}] -->",
        "<!-- curve vertices (exact):",
    ]
    for cell, v in sorted(curve.vertices.items()):
        rows.append(f"  {list(cell)} -> ({v[0]}, {v[1]})")
    rows.append("-->")
    for p, q in _segments(curve.edges, xmin, xmax, ymin, ymax):
        rows.append(
            f'<line x1="{to_px(p).split(",")[0]}" y1="{to_px(p).split(",")[1]}" '
            f'x2="{to_px(q).split(",")[0]}" y2="{to_px(q).split(",")[1]}" '
            'stroke="#1f4e79" stroke-width="1.5"/>'
        )
    if line is not None:
        rows.append(f"<!-- line vertex (exact): ({line.vertex[0]}, {line.vertex[1]}) -->")
        for p, q in _segments(line.rays, xmin, xmax, ymin, ymax):
            rows.append(
                f'<line x1="{to_px(p).split(",")[0]}" y1="{to_px(p).split(",")[1]}" '
                f'x2="{to_px(q).split(",")[0]}" y2="{to_px(q).split(",")[1]}" '
                'stroke="#b03030" stroke-width="1.2" stroke-dasharray="4 2"/>'
            )
    rows.append("</svg>")
    return "\n".join(rows) + "\n"
