"""Sector records and assembly of the orbifold Poincare polynomials of ``M_3``.

Sectors over a rational base are computed.  The four sectors over a base of
positive genus and the untwisted spaces ``M_3``, ``bar M_3`` are entered as
data; the ambient Betti numbers are the ones left over when every twisted
contribution is subtracted from the assembled targets (see
:func:`derive_ambient`).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import admissible, age as age_mod
from .admissible import AdmissibleDatum, SectorShape, parse_datum, sector_shape
from .algebra import BiGraded, LPoly, QGraded, is_palindromic, qgraded_shift
from .genus0 import (
    chi_closed,
    chi_open,
    chi_to_compact_support,
    chi_to_poincare_closed,
    compact_to_ordinary,
)


class MissingRecord(LookupError):
    pass


class OracleMismatch(ArithmeticError):
    pass


class UnsupportedGenus(ValueError):
    pass


COMPUTED = "computed"
PAPER_SOURCED = "paper_sourced"
UNAVAILABLE = "unavailable"


@dataclass(frozen=True)
class SectorRecord:
    datum: AdmissibleDatum
    shape: SectorShape
    age: Fraction
    dim: int
    Pc: BiGraded  # (L-exponent, compact-support degree)
    PH: QGraded
    PH_weights: BiGraded  # (L-exponent, ordinary degree)
    PH_bar: QGraded
    chi: LPoly | None
    chi_bar: LPoly | None
    provenance: str
    source: str = ""

    @property
    def name(self) -> str:
        return self.source or self.datum.label()

    def to_json(self) -> dict:
        rec = self.shape.to_json()
        rec.update(
            age=_fmt(self.age),
            chi_open=self.chi.to_json() if self.chi is not None else None,
            chi_closed=self.chi_bar.to_json() if self.chi_bar is not None else None,
            Pc=self.Pc.to_json(),
            PH=self.PH.to_json(),
            PH_bar=self.PH_bar.to_json(),
            provenance=self.provenance,
        )
        if self.source:
            rec["source"] = self.source
        return rec

    @classmethod
    def from_json(cls, data: dict) -> "SectorRecord":
        A = AdmissibleDatum.from_json(data)
        pc = BiGraded.from_json(data["Pc"])
        return cls(
            datum=A,
            shape=sector_shape(A),
            age=Fraction(data["age"]),
            dim=data["dim"],
            Pc=pc,
            PH=QGraded.from_json(data["PH"]),
            PH_weights=compact_to_ordinary(pc, data["dim"]),
            PH_bar=QGraded.from_json(data["PH_bar"]),
            chi=LPoly.from_json(data["chi_open"]) if data["chi_open"] is not None else None,
            chi_bar=LPoly.from_json(data["chi_closed"]) if data["chi_closed"] is not None else None,
            provenance=data["provenance"],
            source=data.get("source", ""),
        )


def _fmt(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class AmbientRecord:
    PH_M3: QGraded
    PH_M3bar: QGraded
    PH_M3_weights: BiGraded


# Betti numbers of M_3 and bar M_3 (degrees 0..12); rerun derive_ambient() to check.
AMBIENT_M3_BETTI = (1, 0, 1, 0, 0, 0, 1)
AMBIENT_M3BAR_BETTI = (1, 0, 3, 0, 7, 0, 10, 0, 7, 0, 3, 0, 1)
# Hodge weights (as L-exponents) of the classes of H^0, H^2, H^6 of M_3
AMBIENT_M3_WEIGHTS = {0: 0, 2: 1, 6: 6}


def builtin_ambient() -> AmbientRecord:
    ph = QGraded((i, b) for i, b in enumerate(AMBIENT_M3_BETTI) if b)
    ph_bar = QGraded((i, b) for i, b in enumerate(AMBIENT_M3BAR_BETTI) if b)
    weights = BiGraded(((AMBIENT_M3_WEIGHTS[i], i), b) for i, b in enumerate(AMBIENT_M3_BETTI) if b)
    return AmbientRecord(ph, ph_bar, weights)


# compactly supported cohomology (L-exponent, degree) and closed characters
_SPECIAL = {
    "(1,2;4)": ("A", {(4, 8): 1, (2, 5): 1}, [1, 6, 9, 6, 1]),
    "(1,3;1,1)": ("B", {(2, 4): 1, (1, 3): 1, (0, 2): 1}, [1, 3, 1]),
    "(1,4;0,2,0)": ("C'", {(2, 4): 1, (1, 3): 1, (0, 2): 1}, [1, 3, 1]),
    "(2,2;0)": ("D'", {(3, 6): 1, (2, 5): 1}, [1, 4, 4, 1]),
}


def builtin_special_sectors(g: int = 3) -> list[SectorRecord]:
    if g != 3:
        raise UnsupportedGenus("g'>0 sector cohomology unavailable")
    out = []
    for label, (name, pc_terms, chi_bar) in _SPECIAL.items():
        A = parse_datum(label, 3)
        dim = admissible.sector_dimension(A)
        pc = BiGraded(pc_terms)
        ordinary = compact_to_ordinary(pc, dim)
        chi_bar_poly = LPoly(chi_bar)
        out.append(
            SectorRecord(
                datum=A,
                shape=sector_shape(A),
                age=age_mod.checked_age(A),
                dim=dim,
                Pc=pc,
                PH=ordinary.specialize_L(),
                PH_weights=ordinary,
                PH_bar=chi_to_poincare_closed(chi_bar_poly),
                chi=_character_of(pc),
                chi_bar=chi_bar_poly,
                provenance=PAPER_SOURCED,
                source=name,
            )
        )
    return out


def _character_of(pc: BiGraded) -> LPoly:
    terms: dict[int, int] = {}
    for (j, k), m in pc.items():
        terms[int(j)] = terms.get(int(j), 0) + (-1) ** int(k) * m
    return LPoly.from_dict(terms)


def genus0_record(A: AdmissibleDatum) -> SectorRecord:
    dim = admissible.sector_dimension(A)
    if dim == 0:
        chi = chi_bar = LPoly([1])
    else:
        chi, chi_bar = chi_open(A), chi_closed(A)
    pc = chi_to_compact_support(chi, dim)
    ordinary = compact_to_ordinary(pc, dim)
    return SectorRecord(
        datum=A,
        shape=sector_shape(A),
        age=age_mod.checked_age(A),
        dim=dim,
        Pc=pc,
        PH=ordinary.specialize_L(),
        PH_weights=ordinary,
        PH_bar=chi_to_poincare_closed(chi_bar),
        chi=chi,
        chi_bar=chi_bar,
        provenance=COMPUTED,
    )


@lru_cache(maxsize=None)
def _records(g: int) -> tuple[SectorRecord, ...]:
    out = [genus0_record(A) for A in admissible.twisted_sectors(g) if A.g_prime == 0]
    out.extend(builtin_special_sectors(g))
    return tuple(sorted(out, key=lambda r: r.datum.sort_key))


def sector_records(g: int = 3) -> list[SectorRecord]:
    """All twisted-sector records; only genus 3 is complete."""
    return list(_records(g))


def genus0_records(g: int) -> list[SectorRecord]:
    return [genus0_record(A) for A in admissible.twisted_sectors(g) if A.g_prime == 0]


def twisted_contribution(records, compactified: bool) -> QGraded:
    total = QGraded()
    for rec in records:
        ph = rec.PH_bar if compactified else rec.PH
        total = total + qgraded_shift(ph, 2 * rec.age)
    return total


def stub_record(A: AdmissibleDatum, reason: str) -> dict:
    """JSON for a sector whose cohomology is not available: shape and age only."""
    rec = sector_shape(A).to_json()
    rec.update(age=_fmt(age_mod.checked_age(A)), provenance=UNAVAILABLE, incomplete=reason)
    return rec


def _check_records(records, g: int) -> None:
    expected = set(admissible.twisted_sectors(g))
    have = {r.datum for r in records}
    missing = expected - have
    if missing:
        raise MissingRecord(", ".join(sorted(A.label() for A in missing)))


def cr_poincare(g: int = 3, compactified: bool = False, records=None, check: bool = True) -> QGraded:
    if g != 3:
        raise UnsupportedGenus("g'>0 sector cohomology unavailable")
    records = sector_records(g) if records is None else records
    if check:
        _check_records(records, g)
    amb = builtin_ambient()
    ambient = amb.PH_M3bar if compactified else amb.PH_M3
    return ambient + twisted_contribution(records, compactified)


def cr_bigraded(g: int = 3, records=None, check: bool = True) -> BiGraded:
    """Terms ``L^p t^d`` with ``p`` = half the weight plus the age."""
    if g != 3:
        raise UnsupportedGenus("g'>0 sector cohomology unavailable")
    records = sector_records(g) if records is None else records
    if check:
        _check_records(records, g)
    out = builtin_ambient().PH_M3_weights
    for rec in records:
        a = rec.age
        out = out + BiGraded(((p + a, i + 2 * a), m) for (p, i), m in rec.PH_weights.items())
    return out


def duality_audit(poly: QGraded, top=12) -> bool:
    return is_palindromic(poly, top)


def derive_ambient(target: QGraded, records, compactified: bool) -> QGraded:
    """Subtract every twisted contribution from an assembled target.

    What is left is the ordinary Poincare polynomial of the untwisted space.
    It must be a genuine polynomial in integer degrees.
    """
    rest = target.subtract(twisted_contribution(records, compactified))
    negative = {d: m for d, m in rest.items() if m < 0}
    if negative:
        raise OracleMismatch(f"negative multiplicities after subtraction: {negative}")
    if any(d.denominator != 1 for d in rest):
        raise OracleMismatch(f"fractional degrees left in the untwisted part: {sorted(rest)}")
    out = QGraded(rest)
    if compactified and not is_palindromic(out, 12):
        raise OracleMismatch(f"untwisted compactified part {out} is not palindromic")
    return out
