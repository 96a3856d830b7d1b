"""Named invariant checks, run by ``orbisectors selftest``.

Every check looks its collaborators up through module attributes at call time,
so a patched function (a mutation test) is seen by the suite.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Callable

from . import admissible, age, catalog, oracle, reference
from .algebra import BiGraded, LPoly, Q, QGraded
from .genus0 import characters, counting, trees

PROPERTY_GENERA = (2, 3, 4, 5)
CLOSED_BRANCH_CAP = 8
ORACLE_FIELDS = (2, 3, 4, 5)


@dataclass
class CheckResult:
    name: str
    ok: bool
    detail: str = ""
    seconds: float = 0.0

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        tail = f": {self.detail}" if self.detail else ""
        return f"{status} {self.name}{tail}"


CHECKS: list[tuple[str, Callable[[], None]]] = []


def check(name: str):
    def register(fn):
        CHECKS.append((name, fn))
        return fn

    return register


def reference_data(g: int = 3):
    """(table-1 data, table-2 data, positive-genus data) as datum sets."""
    t1 = {admissible.parse_datum(k, g) for k in reference.TABLE_POSITIVE_DIM}
    t2 = {admissible.parse_datum(k, g) for k in reference.TABLE_ZERO_DIM}
    special = {admissible.parse_datum(k, g) for k in reference.POSITIVE_GENUS_DATA}
    return t1, t2, special


def reference_poly(terms: dict) -> QGraded:
    return QGraded({Fraction(k): v for k, v in terms.items()})


def reference_bigraded() -> BiGraded:
    return BiGraded({(Fraction(p), Fraction(d)): m for (p, d), m in reference.CR_BIGRADED.items()})


def parse_lpoly(text: str) -> LPoly:
    """Read ``L^5+3L^4-L+1`` style strings."""
    out = LPoly()
    text = text.replace(" ", "").replace("-", "+-")
    for term in filter(None, text.split("+")):
        sign = -1 if term.startswith("-") else 1
        term = term.lstrip("-")
        if "L" in term:
            coeff, _, power = term.partition("L")
            c = int(coeff) if coeff else 1
            e = int(power.lstrip("^").strip("{}")) if power else 1
        else:
            c, e = int(term), 0
        out = out + LPoly.monomial(e, sign * c)
    return out


@check("enumeration-census")
def _census():
    sectors = admissible.twisted_sectors(3)
    t1, t2, special = reference_data()
    g0 = {A for A in sectors if A.g_prime == 0}
    pos = {A for A in sectors if A.g_prime > 0}
    assert len(g0) == 43, f"{len(g0)} genus-0 sectors"
    assert g0 == t1 | t2, "genus-0 sector list differs from the reference tables"
    assert pos == special, f"positive-genus sectors {sorted(map(str, pos))}"


@check("invariant-replay")
def _replay():
    for g in PROPERTY_GENERA:
        data = admissible.enumerate_admissible(g)
        assert len(set(data)) == len(data), f"duplicates at g={g}"
        assert data == sorted(data), f"not canonically sorted at g={g}"
        dataset = set(data)
        for A in data:
            assert admissible.riemann_hurwitz_holds(A), f"Riemann-Hurwitz fails for {A}"
            assert admissible.structural_equation_holds(A), f"mod-N equation fails for {A}"
            assert admissible.involution(A) in dataset, f"involution leaves the set at {A}"
        assert max(A.N for A in data if admissible.is_twisted_sector(A)) <= 4 * g + 2


@check("age-formula-agreement")
def _age_forms():
    for g in PROPERTY_GENERA:
        for A in admissible.twisted_sectors(g):
            assert age.age(A) == age.age_by_weights(A), f"age forms differ on {A}"


@check("age-duality")
def _age_duality():
    for g in PROPERTY_GENERA:
        for A in admissible.twisted_sectors(g):
            defect = age.duality_defect(A)
            assert defect == 0, f"age(A)+age(iota A) off by {defect} at {A}"
            a = age.age(A)
            # in genus 2 the hyperelliptic involution acts trivially: age 0
            assert a > 0 or (g == 2 and a == 0), f"nonpositive age at {A}"
            assert lcm(2, A.N) % a.denominator == 0, f"denominator of {a} at {A}"


@check("table-ages")
def _table_ages():
    for label, (_, _, a) in reference.TABLE_POSITIVE_DIM.items():
        A = admissible.parse_datum(label, 3)
        assert age.age(A) == Fraction(a), f"{label}: {age.age(A)} != {a}"
    for label, a in reference.TABLE_ZERO_DIM.items():
        A = admissible.parse_datum(label, 3)
        assert age.age(A) == Fraction(a), f"{label}: {age.age(A)} != {a}"
    expected = dict(zip(reference.POSITIVE_GENUS_DATA, ("1", "2", "2", "3/2")))
    for label, a in expected.items():
        A = admissible.parse_datum(label, 3)
        assert age.age(A) == Fraction(a), f"{label}: {age.age(A)} != {a}"


@check("counting-oracle")
def _counting_oracle():
    for n in (3, 4, 5):
        for t in admissible.partitions(n):
            poly = counting.trace_open(n, t)
            for q in ORACLE_FIELDS:
                brute = oracle.brute_force_trace_open(t, q)
                assert brute == poly(q), f"n={n} type={t} q={q}: brute {brute} vs {poly(q)}"


@check("closed-trace-hand-values")
def _closed_hand():
    for t in admissible.partitions(4):
        assert trees.trace_closed_type(4, t) == Q + 1, f"trace on bar M_0,4 for {t}"
    assert trees.trace_closed_type(5, (1,) * 5) == Q**2 + 5 * Q + 1


@check("table-characters-open")
def _table_open():
    t1, t2, _ = reference_data()
    for label, (chi, _, _) in reference.TABLE_POSITIVE_DIM.items():
        A = admissible.parse_datum(label, 3)
        got = characters.chi_open(A)
        assert got == parse_lpoly(chi), f"{label}: {got} != {chi}"
    for A in t2:
        assert catalog.genus0_record(A).chi == LPoly([1])


@check("table-characters-closed")
def _table_closed():
    for label, (_, chi_bar, _) in reference.TABLE_POSITIVE_DIM.items():
        A = admissible.parse_datum(label, 3)
        got = characters.chi_closed(A)
        assert got == parse_lpoly(chi_bar), f"{label}: {got} != {chi_bar}"
        assert got.is_palindromic(admissible.sector_dimension(A))


@check("burnside-integrality-and-purity")
def _properties():
    for g in PROPERTY_GENERA:
        for A in admissible.twisted_sectors(g):
            if A.g_prime != 0:
                continue
            dim = admissible.sector_dimension(A)
            chi = characters.chi_open(A)
            assert chi.degree == dim and chi.leading() == 1, f"{A}: {chi} not monic of degree {dim}"
            characters.chi_to_compact_support(chi, dim)
            if A.total_branch <= CLOSED_BRANCH_CAP:
                chi_bar = characters.chi_closed(A)
                assert chi_bar(1) == characters.chi_to_poincare_closed(chi_bar).total()


@check("theorem-open-golden")
def _thm_open():
    got = catalog.cr_poincare(3, compactified=False)
    want = reference_poly(reference.CR_OPEN)
    assert got == want, f"differs at {got.subtract(want)}"


@check("total-dimension-62")
def _total():
    got = catalog.cr_poincare(3, compactified=False).total()
    assert got == reference.TOTAL_DIMENSION_OPEN, f"total dimension {got}"


@check("theorem-compact-golden")
def _thm_compact():
    got = catalog.cr_poincare(3, compactified=True)
    want = reference_poly(reference.CR_COMPACT)
    assert got == want, f"differs at {got.subtract(want)}"


@check("compact-duality")
def _duality():
    assert catalog.duality_audit(catalog.cr_poincare(3, compactified=True), 12)


@check("bigraded-golden")
def _bigraded():
    got = catalog.cr_bigraded(3)
    assert got == reference_bigraded(), "bigraded character differs from the reference display"
    assert got.specialize_L() == catalog.cr_poincare(3, compactified=False)


@check("ambient-subtraction")
def _ambient():
    records = catalog.sector_records(3)
    amb = catalog.builtin_ambient()
    open_part = catalog.derive_ambient(reference_poly(reference.CR_OPEN), records, False)
    closed_part = catalog.derive_ambient(reference_poly(reference.CR_COMPACT), records, True)
    assert open_part == amb.PH_M3, f"derived {open_part}"
    assert closed_part == amb.PH_M3bar, f"derived {closed_part}"


def run(names=None) -> list[CheckResult]:
    catalog._records.cache_clear()
    results = []
    for name, fn in CHECKS:
        if names and name not in names:
            continue
        start = time.perf_counter()
        try:
            fn()
        except Exception as exc:  # a failing check must not stop the suite
            detail = str(exc) or type(exc).__name__
            results.append(CheckResult(name, False, detail, time.perf_counter() - start))
        else:
            results.append(CheckResult(name, True, "", time.perf_counter() - start))
    catalog._records.cache_clear()
    return results
