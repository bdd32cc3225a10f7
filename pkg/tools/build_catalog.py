"""Regenerate data/motif_catalog.json from scratch.

Enumerates the census, derives deformation-motif data for every
triangulation the growing catalog cannot explain, anchors the published
type names, and freezes the catalog with the non-generic representatives.
Run from the repository root:  python3 tools/build_catalog.py
"""

import pickle
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from tropical_quartics import catalog_builder as cb
from tropical_quartics import census, motifs, subdivision

S_CELLS = [
    [0, 1, 2], [1, 2, 4], [2, 4, 12], [4, 7, 12], [2, 8, 12], [2, 8, 13],
    [8, 12, 13], [2, 5, 13], [5, 9, 13], [9, 13, 14], [7, 11, 12],
    [7, 10, 11], [4, 7, 10], [4, 6, 10], [3, 4, 6], [1, 3, 4],
]
DS_CELLS = [
    [0, 1, 2], [1, 2, 3], [2, 3, 4], [5, 8, 9], [9, 13, 14], [8, 11, 12],
    [3, 7, 8], [6, 10, 11], [3, 6, 11], [3, 7, 11], [8, 12, 13], [3, 4, 8],
    [2, 5, 8], [8, 9, 13], [7, 8, 11], [2, 4, 8],
]


def main():
    t0 = time.time()
    cache = Path("/tmp/census.pkl")
    if cache.exists():
        regular = pickle.load(open(cache, "rb"))
        print(f"census loaded from cache: {len(regular)} orbits")
    else:
        orbits = census.enumerate_unimodular_orbits()
        regular = [o for o in orbits if subdivision.is_regular(o)]
        pickle.dump(regular, open(cache, "wb"))
        print(f"census computed: {len(regular)} orbits")
    nongeneric = [o for o in regular if census.can_never_be_generic(o)]
    print(f"non-generic orbits: {len(nongeneric)}")

    def log(*args):
        print(f"[{time.time()-t0:7.0f}s]", *args, flush=True)

    entries, failures = cb.build_entries(
        regular, processes=1, log=log,
        priority=[S_CELLS, DS_CELLS],
    )
    log(f"{len(entries)} types, {len(failures)} failures")
    for cells, err in failures.items():
        log("FAILURE:", err, "cells:", cells)

    # anchor the published type name for the $DS chamber example: among the
    # motifs of $DS, the deformation class with the largest wall count
    ds = subdivision.validate_triangulation(DS_CELLS)
    matched = cb.match_entries(ds, entries)
    best = None
    for name, tris, sigma in matched:
        n_walls = len(entries[name]["hyperplanes"])
        if best is None or n_walls > best[1]:
            best = (name, n_walls)
    wname, nw = best
    if wname != "DLO" and "W...HH+(xz)" not in entries:
        entries["W...HH+(xz)"] = entries.pop(wname)
        log(f"renamed {wname} ({nw} walls) to W...HH+(xz)")

    catalog = motifs.Catalog(
        entries,
        {subdivision.minimal_representative(o) for o in nongeneric},
        version="1",
    )
    out = Path(__file__).resolve().parent.parent / "src" / "tropical_quartics" / "data" / "motif_catalog.json"
    motifs.save_catalog(catalog, out)
    log(f"catalog written to {out}")

    # final validation: exactly 7 motifs everywhere
    bad = []
    for cells in regular:
        n = len(catalog.find_all_motifs(cells))
        if n != 7:
            bad.append((cells, n))
    log(f"validation: {len(bad)} triangulations without exactly 7 motifs")
    for cells, n in bad[:10]:
        log("BAD:", n, cells)


if __name__ == "__main__":
    main()
