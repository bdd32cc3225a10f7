"""Command line interface.

Triangulations are accepted as JSON cell lists (--cells) or database ids
(--id, needs a built store); coefficient vectors as comma-separated
rationals.  All subcommands are deterministic; --json switches the tabular
output to machine-readable JSON matching the database schema.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import census as census_mod
from . import chambers as chambers_mod
from . import db as db_mod
from . import motifs as motifs_mod
from . import oracle as oracle_mod
from . import pluecker as pluecker_mod
from . import render as render_mod
from . import subdivision
from .curve import MAX, MIN, NonSmoothCurve, TropicalLine, TropicalQuartic


def _parse_coeffs(text):
    vals = [Fraction(part.strip()) for part in text.split(",")]
    if len(vals) != 15:
        raise ValueError(f"need 15 coefficients, got {len(vals)}")
    return vals


def _parse_signs(text):
    vals = [int(part.strip()) for part in text.split(",")]
    if len(vals) != 15 or any(v not in (1, -1) for v in vals):
        raise ValueError("sign vector needs 15 entries of +-1")
    return vals


def _cells_from_args(args, store_path=None):
    if getattr(args, "cells", None):
        return subdivision.validate_triangulation(json.loads(args.cells))
    if getattr(args, "id", None) is not None:
        store = db_mod.Store(store_path or db_mod.default_store_path())
        doc = store.load(args.id)
        return subdivision.validate_triangulation(doc["maximal_cells"])
    raise ValueError("give a triangulation via --cells or --id")


def _catalog(args):
    return motifs_mod.load_catalog(getattr(args, "catalog", None))


def _print_rows(rows, as_json):
    if as_json:
        print(json.dumps(rows, indent=1, sort_keys=True, default=str))
    else:
        for row in rows:
            print(row)


def cmd_curve(args):
    curve = TropicalQuartic(_parse_coeffs(args.coeffs), args.convention)
    if args.json:
        payload = {
            "convention": curve.convention,
            "dual_triangulation": [list(c) for c in curve.triangulation],
            "vertices": {
                str(list(c)): [str(v[0]), str(v[1])]
                for c, v in sorted(curve.vertices.items())
            },
            "edges": [
                {
                    "dual": list(p.dual),
                    "base": [str(p.base[0]), str(p.base[1])],
                    "direction": list(p.direction),
                    "bounded": p.bounded,
                }
                for p in curve.edges
            ],
        }
        print(json.dumps(payload, indent=1, sort_keys=True))
        return 0
    print(f"smooth tropical quartic ({curve.convention} convention)")
    print("dual triangulation:", [list(c) for c in curve.triangulation])
    for cell, v in sorted(curve.vertices.items()):
        print(f"  vertex {list(cell)} at ({v[0]}, {v[1]})")
    rays = sum(1 for p in curve.edges if not p.bounded)
    print(f"{len(curve.edges)} edges ({rays} rays)")
    return 0


def cmd_bitangents(args):
    curve = TropicalQuartic(_parse_coeffs(args.coeffs), args.convention)
    classes = oracle_mod.enumerate_bitangent_classes(curve)
    rows = []
    for i, b in enumerate(classes):
        fp = oracle_mod.class_fingerprint(b)
        rows.append({
            "class": i,
            "dimension": b.dimension,
            "cells": len(b.cells),
            "unbounded": b.unbounded,
            "sample": [str(b.sample()[0]), str(b.sample()[1])],
            "fingerprint": str(fp),
        })
    if args.json:
        print(json.dumps(rows, indent=1, sort_keys=True))
    else:
        print(f"{len(classes)} bitangent classes")
        for row in rows:
            print(
                f"  class {row['class']}: dim {row['dimension']}, "
                f"{row['cells']} cells"
                + (", unbounded" if row["unbounded"] else "")
                + f", sample ({row['sample'][0]}, {row['sample'][1]})"
            )
    return 0


def cmd_motifs(args):
    cells = _cells_from_args(args, getattr(args, "store", None))
    catalog = _catalog(args)
    found = catalog.find_all_motifs(cells)
    rows = []
    for m in found:
        rows.append({
            "type": m.type_name,
            "symmetry": m.symmetry,
            "triangles": [list(t) for t in m.triangles],
            "sign_conditions": [list(c) for c in m.sign_conditions],
            "hyperplanes": [list(h) for h in m.hyperplanes],
        })
    if args.json:
        print(json.dumps(rows, indent=1, sort_keys=True))
    else:
        print(f"{len(found)} deformation motifs")
        for row in rows:
            print(f"  {row['type']} (symmetry {row['symmetry']}): "
                  f"triangles {row['triangles']}")
    return 0


def cmd_signs(args):
    cells = _cells_from_args(args, getattr(args, "store", None))
    catalog = _catalog(args)
    found = catalog.find_all_motifs(cells)
    rows = [[list(c) for c in m.sign_conditions] for m in found]
    if args.json:
        print(json.dumps(rows, indent=1))
    else:
        for pair in rows:
            print(
                "[{" + " ".join(map(str, pair[0])) + "},{"
                + " ".join(map(str, pair[1])) + "}]"
            )
    return 0


def cmd_pluecker(args):
    cells = _cells_from_args(args, getattr(args, "store", None))
    catalog = _catalog(args)
    if args.vector:
        signs = _parse_signs(args.vector)
        print(pluecker_mod.give_pluecker(cells, signs, catalog))
        return 0
    sweep = pluecker_mod.pluecker_sweep(cells, catalog)
    if args.json:
        print(json.dumps({
            "pluecker_numbers": sorted(sweep.achievable_counts),
            "sign_representatives": {
                str(k): list(v) for k, v in sorted(sweep.representatives.items())
            },
        }, indent=1))
    else:
        print("achievable counts:", sorted(sweep.achievable_counts))
        for count, vec in sorted(sweep.representatives.items()):
            print(f"  {count}: {','.join(str(s) for s in vec)}")
    return 0


def cmd_chambers(args):
    cells = _cells_from_args(args, getattr(args, "store", None))
    catalog = _catalog(args)
    report = chambers_mod.shape_report(cells, catalog)
    if args.motif is not None:
        report = [report[args.motif]]
    rows = []
    for block in report:
        rows.append({
            "type": block["motif"].type_name,
            "chambers": [
                {
                    "pattern": ch["pattern"],
                    "dimension": ch["dimension"],
                    "point": [str(v) for v in (ch["point"] or [])],
                    "shape": ch["shape"],
                }
                for ch in block["chambers"]
            ],
        })
    if args.json:
        print(json.dumps(rows, indent=1, sort_keys=True))
    else:
        for row in rows:
            print(f"motif {row['type']}: {len(row['chambers'])} chambers")
            for ch in row["chambers"]:
                print(f"  [{ch['pattern'] or ' '}] dim {ch['dimension']} "
                      f"shape {ch['shape']}")
    return 0


def cmd_census(args):
    pairs = census_mod.enumerate_census()
    print(f"{len(pairs)} regular unimodular triangulations up to symmetry")
    print(f"{sum(1 for _, g in pairs if g)} generic, "
          f"{sum(1 for _, g in pairs if not g)} non-generic")
    if args.store:
        catalog = _catalog(args)
        store = db_mod.Store(args.store)
        n = store.build((c for c, _ in pairs), catalog,
                        progress=lambda done, total:
                        print(f"  {done}/{total}", file=sys.stderr))
        print(f"stored {n} documents in {args.store}")
    return 0


def cmd_db(args):
    store = db_mod.Store(args.store or db_mod.default_store_path())
    if args.db_command == "build":
        catalog = _catalog(args)
        pairs = census_mod.enumerate_census()
        id_map = db_mod.load_id_map(args.id_map) if args.id_map else None
        n = store.build((c for c, _ in pairs), catalog, id_map=id_map)
        print(f"stored {n} documents")
        return 0
    if args.db_command == "find":
        cells = subdivision.validate_triangulation(json.loads(args.cells))
        print(store.find(cells))
        return 0
    if args.db_command == "query":
        filters = json.loads(args.filter) if args.filter else {}
        docs = store.query(filters)
        if args.json:
            print(json.dumps(docs, indent=1, sort_keys=True))
        else:
            for doc in docs:
                print(doc["id"], "generic" if doc["is_generic"] else "non-generic",
                      doc["pluecker_numbers"])
            print(f"{len(docs)} documents")
        return 0
    if args.db_command == "audit":
        catalog = _catalog(args)
        bad = store.audit(catalog)
        if bad:
            print(f"mismatched documents: {bad}")
            return 1
        print("all documents reproduce from their cells")
        return 0
    raise ValueError(f"unknown db command {args.db_command}")


def cmd_render(args):
    curve = TropicalQuartic(_parse_coeffs(args.coeffs), args.convention)
    line = None
    if args.line:
        vx, vy = (Fraction(v) for v in args.line.split(","))
        line = TropicalLine((vx, vy), args.convention)
    svg = render_mod.render_svg(curve, line)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(svg)
        print(f"wrote {args.output}")
    else:
        print(svg, end="")
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="tropical-quartics",
        description="Smooth tropical plane quartics, bitangents and lifting counts",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, cells=False, catalog=False):
        p.add_argument("--json", action="store_true", help="machine output")
        if cells:
            p.add_argument("--cells", help="JSON list of 16 index triples")
            p.add_argument("--id", type=int, help="database identifier")
            p.add_argument("--store", help="database directory")
        if catalog:
            p.add_argument("--catalog", help="alternative motif catalog file")

    p = sub.add_parser("curve", help="vertices and edges of a quartic")
    p.add_argument("--coeffs", required=True)
    p.add_argument("--convention", choices=(MIN, MAX), default=MIN)
    add_common(p)
    p.set_defaults(func=cmd_curve)

    p = sub.add_parser("bitangents", help="geometric bitangent classes")
    p.add_argument("--coeffs", required=True)
    p.add_argument("--convention", choices=(MIN, MAX), default=MIN)
    add_common(p)
    p.set_defaults(func=cmd_bitangents)

    p = sub.add_parser("motifs", help="deformation motifs of a triangulation")
    add_common(p, cells=True, catalog=True)
    p.set_defaults(func=cmd_motifs)

    p = sub.add_parser("signs", help="real-lifting sign conditions")
    add_common(p, cells=True, catalog=True)
    p.set_defaults(func=cmd_signs)

    p = sub.add_parser("pluecker", help="real bitangent counts")
    p.add_argument("--vector", help="15 comma-separated signs")
    add_common(p, cells=True, catalog=True)
    p.set_defaults(func=cmd_pluecker)

    p = sub.add_parser("chambers", help="shape chambers of the secondary cone")
    p.add_argument("--motif", type=int, help="restrict to one motif index")
    add_common(p, cells=True, catalog=True)
    p.set_defaults(func=cmd_chambers)

    p = sub.add_parser("census", help="enumerate the 1278 triangulations")
    p.add_argument("--store", help="also build the document store here")
    p.add_argument("--catalog")
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("db", help="document store operations")
    p.add_argument("db_command", choices=("build", "find", "query", "audit"))
    p.add_argument("--store")
    p.add_argument("--cells")
    p.add_argument("--filter")
    p.add_argument("--id-map", dest="id_map",
                   help="published id map (JSON list of {id, cells})")
    p.add_argument("--catalog")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_db)

    p = sub.add_parser("render", help="SVG plot of a curve (and a line)")
    p.add_argument("--coeffs", required=True)
    p.add_argument("--convention", choices=(MIN, MAX), default=MIN)
    p.add_argument("--line", help="line vertex as x,y")
    p.add_argument("--output", "-o")
    p.set_defaults(func=cmd_render)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args) or 0
    except (NonSmoothCurve, subdivision.NotATriangulation, ValueError,
            db_mod.StoreError, pluecker_mod.NonGenericError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
