import pickle
from pathlib import Path

import pytest

from tropical_quartics import census as census_mod
from tropical_quartics import motifs as motifs_mod
from tropical_quartics import subdivision

# the section-3 dual subdivision $S
S_CELLS = [
    [0, 1, 2], [1, 2, 4], [2, 4, 12], [4, 7, 12], [2, 8, 12], [2, 8, 13],
    [8, 12, 13], [2, 5, 13], [5, 9, 13], [9, 13, 14], [7, 11, 12],
    [7, 10, 11], [4, 7, 10], [4, 6, 10], [3, 4, 6], [1, 3, 4],
]
# the section-5 dual subdivision $DS
DS_CELLS = [
    [0, 1, 2], [1, 2, 3], [2, 3, 4], [5, 8, 9], [9, 13, 14], [8, 11, 12],
    [3, 7, 8], [6, 10, 11], [3, 6, 11], [3, 7, 11], [8, 12, 13], [3, 4, 8],
    [2, 5, 8], [8, 9, 13], [7, 8, 11], [2, 4, 8],
]
# the section-3 printed ALL_SIGN_CONDITIONS of $S (seven pairs of sets)
S_PRINTED_CONDITIONS = [
    ((-1, 2, 8, 12, 13), (-1, 1, 2, 4, 12)),
    ((-1, 2, 8, 12, 13), (10, 12)),
    ((-1, 2, 8, 12, 13), (10, 12)),
    ((-1, 1, 2, 4, 12), ()),
    ((10, 12), ()),
    ((10, 12), ()),
    ((-1, 1, 2, 4, 10), ()),
]
# the printed give_pluecker sign vector
S_SIGN_VECTOR = (1, 1, -1, 1, -1, -1, 1, 1, 1, -1, -1, 1, 1, 1, -1)
# the printed DLO fixture (position inside $S, symmetry 1)
DLO_S_TRIANGLES = ((1, 2, 4), (2, 4, 12), (4, 7, 12))
DLO_S_CONDITIONS = ((-1, 1, 2, 4, 12), ())
DLO_S_HYPERPLANE = (0, 1, -1, 0, 1, 0, 0, -2, 0, 0, 0, 0, 1, 0, 0)
# the section-3 max-convention coefficient vector defining $C
C_MAX_COEFFS = (-14, -9, -4, -6, 0, -12, -4, 0, -5, -21, -3, -1, 0, -12, -31)
# the three Figure-5 weight vectors (max convention) and the wall row
FIG5_LAMBDA_1 = ("0", "5", "5", "9", "8", "5", "13/2", "9", "9", "4", "2", "7", "8", "7", "1")
FIG5_LAMBDA_2 = ("0", "5", "5", "9", "8", "5", "6", "9", "9", "4", "2", "7", "8", "7", "1")
FIG5_LAMBDA_3 = ("0", "5", "5", "9", "8", "5", "11/2", "9", "9", "4", "1", "7", "8", "7", "1")
FIG5_WALL_ROW = (0, 0, 0, 0, -1, 0, 1, 0, 1, 0, 0, -1, 0, 0, 0)  # l8-l4-l11+l6


@pytest.fixture(scope="session")
def s_cells():
    return subdivision.validate_triangulation(S_CELLS)


@pytest.fixture(scope="session")
def ds_cells():
    return subdivision.validate_triangulation(DS_CELLS)


@pytest.fixture(scope="session")
def catalog():
    try:
        return motifs_mod.load_catalog()
    except FileNotFoundError:
        pytest.skip("motif catalog data file not generated yet")


@pytest.fixture(scope="session")
def census_pairs(tmp_path_factory):
    """The full census with genericity flags, cached on disk per session."""
    cache = Path("/tmp/tq_census_cache.pkl")
    if cache.exists():
        with open(cache, "rb") as fh:
            return pickle.load(fh)
    pairs = census_mod.enumerate_census()
    with open(cache, "wb") as fh:
        pickle.dump(pairs, fh)
    return pairs
