"""File-backed document collection for the quartic census.

One JSON document per S3 orbit representative plus a newline-delimited
index; everything re-derivable from the maximal cells, which the audit
command checks bit for bit.  Rationals serialize as "p/q" strings, sign
vectors as arrays of +-1.  No database server involved.
"""

from __future__ import annotations

import json
import os
from fractions import Fraction
from pathlib import Path

from . import census as census_mod
from . import pluecker, subdivision

ENV_STORE_PATH = "TROPICAL_QUARTICS_DB"
INDEX_NAME = "index.ndjson"


class StoreError(RuntimeError):
    pass


def default_store_path():
    return Path(os.environ.get(ENV_STORE_PATH, "quartic_db"))


def _frac_str(x) -> str:
    f = Fraction(x)
    return f"{f.numerator}/{f.denominator}" if f.denominator != 1 else str(f.numerator)


def _parse_frac(s) -> Fraction:
    return Fraction(s)


def document_for(cells, catalog):
    """The full database document of one triangulation (id not yet set)."""
    cells = subdivision.validate_triangulation(cells)
    motifs = catalog.find_all_motifs(cells)
    generic = catalog.is_generic(cells)
    doc = {
        "maximal_cells": [list(c) for c in cells],
        "gkz_vector": [_frac_str(v) for v in subdivision.gkz_vector(cells)],
        "minimal_representative": [
            list(c) for c in subdivision.minimal_representative(cells)
        ],
        "is_generic": generic,
        "deformation_motifs": [
            {
                "triangles": [list(t) for t in m.triangles],
                "type": m.type_name,
                "symmetry": m.symmetry,
                "sign_conditions": [list(c) for c in m.sign_conditions],
                "hyperplanes": [list(h) for h in m.hyperplanes],
            }
            for m in motifs
        ],
    }
    if generic:
        sweep = pluecker.pluecker_sweep(cells, catalog)
        doc["pluecker_numbers"] = sorted(sweep.achievable_counts)
        doc["sign_representatives"] = {
            str(k): list(v) for k, v in sorted(sweep.representatives.items())
        }
    else:
        doc["pluecker_numbers"] = None
        doc["sign_representatives"] = None
    return doc


class Store:
    def __init__(self, path):
        self.path = Path(path)

    def build(self, census_cells, catalog, id_map=None, progress=None):
        """One document per representative; ids 1..N in lexicographic order
        of the minimal representatives unless an imported id map says
        otherwise."""
        reps = sorted(subdivision.minimal_representative(c) for c in census_cells)
        if len(set(reps)) != len(reps):
            raise StoreError("census contains duplicate orbits")
        assignments = {}
        if id_map is not None:
            for ident, cells in id_map.items():
                assignments[subdivision.minimal_representative(cells)] = int(ident)
            missing = [r for r in reps if r not in assignments]
            if missing:
                raise StoreError(
                    f"id map misses {len(missing)} census representatives"
                )
        else:
            assignments = {rep: i + 1 for i, rep in enumerate(reps)}
        self.path.mkdir(parents=True, exist_ok=True)
        index_rows = []
        for n, rep in enumerate(reps):
            doc = document_for(rep, catalog)
            doc["id"] = assignments[rep]
            with open(self.path / f"{doc['id']}.json", "w") as fh:
                json.dump(doc, fh, indent=1, sort_keys=True)
                fh.write("\n")
            index_rows.append({
                "id": doc["id"],
                "minimal_representative": doc["minimal_representative"],
                "is_generic": doc["is_generic"],
                "pluecker_numbers": doc["pluecker_numbers"],
            })
            if progress and (n + 1) % 100 == 0:
                progress(n + 1, len(reps))
        index_rows.sort(key=lambda r: r["id"])
        with open(self.path / INDEX_NAME, "w") as fh:
            for row in index_rows:
                fh.write(json.dumps(row, sort_keys=True) + "\n")
        return len(index_rows)

    def _index(self):
        path = self.path / INDEX_NAME
        if not path.exists():
            raise StoreError(f"no index at {path}; run the build first")
        with open(path) as fh:
            return [json.loads(line) for line in fh if line.strip()]

    def load(self, ident: int):
        path = self.path / f"{int(ident)}.json"
        if not path.exists():
            raise StoreError(f"no document {ident}")
        with open(path) as fh:
            return json.load(fh)

    def __len__(self):
        return len(self._index())

    def find(self, cells) -> int:
        """Identifier of the orbit of the given triangulation."""
        rep = [list(c) for c in subdivision.minimal_representative(cells)]
        for row in self._index():
            if row["minimal_representative"] == rep:
                return row["id"]
        raise StoreError("triangulation not in the collection")

    def query(self, filters=None):
        """Documents matching the filters: field -> value for equality, or
        field -> {"contains": x} for membership."""
        filters = filters or {}
        out = []
        for row in self._index():
            doc = self.load(row["id"])
            if all(_matches(doc, field, want) for field, want in filters.items()):
                out.append(doc)
        return out

    def audit(self, catalog):
        """Recompute every document from its cells; returns mismatched ids."""
        bad = []
        for row in self._index():
            doc = self.load(row["id"])
            fresh = document_for(doc["maximal_cells"], catalog)
            fresh["id"] = doc["id"]
            if fresh != doc:
                bad.append(doc["id"])
        return bad


def _matches(doc, field, want) -> bool:
    if field not in doc:
        raise StoreError(f"unknown field {field!r}")
    value = doc[field]
    if isinstance(want, dict) and set(want) == {"contains"}:
        return value is not None and want["contains"] in value
    return value == want


def load_id_map(path):
    """User-supplied reference map: JSON list of {"id": n, "cells": [[...]]}."""
    with open(path) as fh:
        data = json.load(fh)
    return {entry["id"]: entry["cells"] for entry in data}
