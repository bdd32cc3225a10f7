"""Smooth tropical plane quartics: dual triangulations, bitangent classes,
real lifting conditions and the census of 1278 combinatorial types."""

from .curve import (
    MAX,
    MIN,
    NonSmoothCurve,
    TropicalLine,
    TropicalQuartic,
    is_bitangent,
    stable_intersection,
)
from .lattice import ACTION_TABLE, POINTS, point_of_index
from .motifs import Catalog, load_catalog
from .oracle import enumerate_bitangent_classes
from .pluecker import give_pluecker, pluecker_sweep
from .subdivision import (
    gkz_vector,
    is_unimodular_triangulation,
    minimal_representative,
    secondary_cone,
    subdivision_from_weights,
)

__version__ = "0.1.0"

__all__ = [
    "ACTION_TABLE",
    "Catalog",
    "MAX",
    "MIN",
    "NonSmoothCurve",
    "POINTS",
    "TropicalLine",
    "TropicalQuartic",
    "enumerate_bitangent_classes",
    "give_pluecker",
    "gkz_vector",
    "is_bitangent",
    "is_unimodular_triangulation",
    "load_catalog",
    "minimal_representative",
    "pluecker_sweep",
    "point_of_index",
    "secondary_cone",
    "stable_intersection",
    "subdivision_from_weights",
]
