"""Twisted sectors of the inertia stack of moduli of curves, with exact arithmetic."""

from .admissible import AdmissibleDatum, enumerate_admissible, parse_datum, twisted_sectors
from .algebra import BiGraded, LPoly, QGraded
from .catalog import cr_bigraded, cr_poincare, sector_records

__all__ = [
    "AdmissibleDatum",
    "BiGraded",
    "LPoly",
    "QGraded",
    "cr_bigraded",
    "cr_poincare",
    "enumerate_admissible",
    "parse_datum",
    "sector_records",
    "twisted_sectors",
]
