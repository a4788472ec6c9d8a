"""Counting inequivalent binary Goppa codes via PGL(2, 2^n) orbit counts."""

from .census import CensusReport, corollary_formulas, orbit_count_total, pgl_orbit_count
from .gf2 import FieldCtx, FieldElem, embedding, field_new
from .pgl import ProjMat, act, conjugacy_classes
from .polyring import Poly, iter_irreducible

__version__ = "0.1.0"

__all__ = [
    "CensusReport",
    "FieldCtx",
    "FieldElem",
    "Poly",
    "ProjMat",
    "act",
    "conjugacy_classes",
    "corollary_formulas",
    "embedding",
    "field_new",
    "iter_irreducible",
    "orbit_count_total",
    "pgl_orbit_count",
]
