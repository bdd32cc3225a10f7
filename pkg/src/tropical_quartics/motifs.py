"""Deformation motifs: catalog, matching, transport and genericity.

The catalog maps type names to identity-position data (triangles, the two
real-lifting sign-condition sets, hyperplane rows).  Finding the motifs of a
triangulation is subset matching of the transported triangle patterns over
the six symmetries, deduplicated by (type, triangle set) keeping the
smallest symmetry index.  Every regular unimodular triangulation of
4*Delta_2 contains exactly 7.
"""

from __future__ import annotations

import hashlib
import json
from importlib import resources

from . import lattice, subdivision

CATALOG_RESOURCE = "motif_catalog.json"

# Published fixtures the catalog must reproduce (validated at load).
DLO_IDENTITY_TRIANGLES = ((1, 2, 4), (1, 4, 12), (4, 8, 12))
DLO_IDENTITY_CONDITIONS = ((-1, 1, 2, 4, 12), ())
DLO_IDENTITY_HYPERPLANES = ((0, -1, 1, 0, 1, 0, 0, 0, -2, 0, 0, 0, 1, 0, 0),)


class CatalogError(ValueError):
    pass


class Motif:
    """A deformation motif found inside a triangulation."""

    __slots__ = ("type_name", "triangles", "symmetry", "sign_conditions",
                 "hyperplanes")

    def __init__(self, type_name, triangles, symmetry, sign_conditions,
                 hyperplanes):
        self.type_name = type_name
        self.triangles = triangles
        self.symmetry = symmetry
        self.sign_conditions = sign_conditions
        self.hyperplanes = hyperplanes

    def __repr__(self):
        return (f"Motif({self.type_name!r}, symmetry={self.symmetry}, "
                f"triangles={list(map(list, self.triangles))})")


def transport_condition(cond, sigma):
    """Indices mapped by the action row; the -1 token stays put."""
    row = lattice.ACTION_TABLE[sigma]
    out = []
    for part in cond:
        mapped = sorted(row[i] for i in part if i != -1)
        if -1 in part:
            mapped = [-1] + mapped
        out.append(tuple(mapped))
    return tuple(out)


def transport_row(hyperplane, sigma):
    row = lattice.ACTION_TABLE[sigma]
    out = [0] * 15
    for i, v in enumerate(hyperplane):
        out[row[i]] = v
    return tuple(out)


def canonical_conditions(conds):
    """Order the two sets canonically: nonempty before empty, then by
    (length, content)."""
    parts = sorted((tuple(c) for c in conds), key=lambda t: (len(t) == 0, len(t), t))
    while len(parts) < 2:
        parts.append(())
    return tuple(parts[:2])


class Catalog:
    def __init__(self, entries, nongeneric_reps, version="derived", checksum=None):
        self.entries = entries  # name -> dict(triangles, conditions, hyperplanes, shapes)
        self.nongeneric_reps = set(nongeneric_reps)
        self.version = version
        self.checksum = checksum
        self._validate()

    def _validate(self):
        dlo = self.entries.get("DLO")
        if dlo is None:
            raise CatalogError("catalog has no DLO entry")
        if tuple(dlo["triangles"]) != DLO_IDENTITY_TRIANGLES:
            raise CatalogError("DLO identity triangles do not match the fixture")
        if canonical_conditions(dlo["conditions"]) != DLO_IDENTITY_CONDITIONS:
            raise CatalogError("DLO identity sign conditions do not match")
        if tuple(dlo["hyperplanes"]) != DLO_IDENTITY_HYPERPLANES:
            raise CatalogError("DLO identity hyperplanes do not match")
        for name, entry in self.entries.items():
            for cond in entry["conditions"]:
                indices = [i for i in cond if i != -1]
                if len(indices) % 2:
                    raise CatalogError(
                        f"odd sign condition in {name}: global sign flips "
                        "would change it, breaking the 2^14 standardization"
                    )

    @property
    def has_shape_tables(self):
        return all(e.get("shapes") for e in self.entries.values())

    def find_all_motifs(self, cells):
        """Algorithm: for each entry and symmetry, emit the transported motif
        whenever its triangles lie in the triangulation; duplicates by (type,
        triangle set) collapse onto the smallest symmetry index."""
        cellset = set(lattice.sort_triangles(cells))
        found = {}
        for name in sorted(self.entries):
            entry = self.entries[name]
            for sigma in range(6):
                tris = lattice.apply_to_triangles(sigma, entry["triangles"])
                if not set(tris) <= cellset:
                    continue
                key = (name, tris)
                if key in found:
                    continue
                found[key] = Motif(
                    name, tris, sigma,
                    canonical_conditions(
                        transport_condition(entry["conditions"], sigma)
                    ),
                    tuple(transport_row(h, sigma) for h in entry["hyperplanes"]),
                )
        return sorted(
            found.values(), key=lambda m: (m.type_name, m.triangles)
        )

    def is_generic(self, cells) -> bool:
        rep = subdivision.minimal_representative(cells)
        return rep not in self.nongeneric_reps

    def shape_letter(self, type_name, sign_pattern):
        """Shape letter for a hyperplane sign pattern, or the pattern itself
        when the naming table is absent (the published tables are external
        figure data)."""
        table = self.entries[type_name].get("shapes") or {}
        return table.get(sign_pattern, sign_pattern)


def _entry_to_json(entry):
    return {
        "triangles": [list(t) for t in entry["triangles"]],
        "conditions": [list(c) for c in entry["conditions"]],
        "hyperplanes": [list(h) for h in entry["hyperplanes"]],
        "shapes": entry.get("shapes") or {},
    }


def _entry_from_json(data):
    return {
        "triangles": tuple(tuple(t) for t in data["triangles"]),
        "conditions": canonical_conditions(tuple(map(tuple, data["conditions"]))),
        "hyperplanes": tuple(tuple(h) for h in data["hyperplanes"]),
        "shapes": data.get("shapes") or {},
    }


def _payload_checksum(payload):
    blob = json.dumps(payload, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(blob.encode()).hexdigest()


def save_catalog(catalog, path):
    payload = {
        "version": catalog.version,
        "entries": {n: _entry_to_json(e) for n, e in sorted(catalog.entries.items())},
        "nongeneric_representatives": [
            [list(t) for t in rep] for rep in sorted(catalog.nongeneric_reps)
        ],
    }
    payload["checksum"] = _payload_checksum(
        {k: payload[k] for k in ("version", "entries", "nongeneric_representatives")}
    )
    with open(path, "w") as fh:
        json.dump(payload, fh, indent=1, sort_keys=True)
        fh.write("\n")


def load_catalog(path=None):
    if path is None:
        ref = resources.files("tropical_quartics").joinpath("data", CATALOG_RESOURCE)
        payload = json.loads(ref.read_text())
    else:
        with open(path) as fh:
            payload = json.load(fh)
    expected = payload.get("checksum")
    body = {k: payload[k] for k in ("version", "entries", "nongeneric_representatives")}
    if expected is not None and _payload_checksum(body) != expected:
        raise CatalogError("catalog checksum mismatch")
    entries = {n: _entry_from_json(e) for n, e in payload["entries"].items()}
    reps = {
        tuple(tuple(t) for t in rep)
        for rep in payload["nongeneric_representatives"]
    }
    return Catalog(entries, reps, payload.get("version", "?"), expected)
