"""Characters of genus-0-base sectors and their Poincare polynomials.

A sector with rational base is ``M_{0,d} / S_A`` and its compactification has
the cohomology of ``bar M_{0,d} / S_A``.  Invariant parts come from Burnside
averaging of the twisted traces over the Young subgroup ``S_A``.
"""

from __future__ import annotations

from ..admissible import (
    AdmissibleDatum,
    connectedness_k,
    sector_dimension,
    young_classes,
    young_order,
)
from ..algebra import BiGraded, LPoly, QGraded
from .counting import trace_open
from .trees import trace_closed_type


class NonIntegralBurnside(ArithmeticError):
    pass


class NonPalindromic(ArithmeticError):
    pass


class SignViolation(ArithmeticError):
    pass


class NegativeCoefficient(ArithmeticError):
    pass


def _require_genus0(A: AdmissibleDatum) -> None:
    if A.g_prime != 0:
        raise ValueError(f"{A} does not have rational base")
    if connectedness_k(A) != 1:
        raise ValueError(f"{A} parametrizes disconnected covers only")
    if A.total_branch < 3:
        raise ValueError(f"{A} has fewer than three branch points")


def burnside_average(A: AdmissibleDatum, trace) -> LPoly:
    total = LPoly()
    for cycle_type, size in young_classes(A):
        total = total + size * trace(A.total_branch, cycle_type)
    order = young_order(A)
    if any(c % order for c in total):
        raise NonIntegralBurnside(f"{A}: {total} not divisible by |S_A| = {order}")
    return LPoly(c // order for c in total)


def chi_open(A: AdmissibleDatum) -> LPoly:
    """Compactly supported character of ``M_A``."""
    _require_genus0(A)
    return burnside_average(A, trace_open)


def chi_closed(A: AdmissibleDatum) -> LPoly:
    """Character of the compactified sector ``bar M_A``."""
    _require_genus0(A)
    chi = burnside_average(A, trace_closed_type)
    if not chi.is_palindromic(sector_dimension(A)):
        raise NonPalindromic(f"{A}: {chi} is not palindromic of degree {sector_dimension(A)}")
    return chi


def chi_to_compact_support(chi: LPoly, dim: int) -> BiGraded:
    """Spread a pure Tate character into compactly supported degrees.

    ``L^j`` sits in ``H_c^{j + dim}``, so its sign must be ``(-1)^(j + dim)``.
    """
    terms = {}
    for j, c in enumerate(chi):
        if not c:
            continue
        k = j + dim
        if (c > 0) != (k % 2 == 0):
            raise SignViolation(f"coefficient {c} of L^{j} breaks the sign pattern (dim {dim})")
        terms[(j, k)] = abs(c)
    return BiGraded(terms)


def compact_to_ordinary(pc: BiGraded, dim: int) -> BiGraded:
    """Poincare duality: ``H_c^k`` of weight ``L^j`` gives ``H^(2dim-k)`` of weight ``L^(dim-j)``."""
    return BiGraded(((dim - j, 2 * dim - k), m) for (j, k), m in pc.items())


def chi_to_poincare_open(chi: LPoly, dim: int) -> tuple[BiGraded, QGraded]:
    pc = chi_to_compact_support(chi, dim)
    return pc, compact_to_ordinary(pc, dim).specialize_L()


def chi_to_poincare_closed(chi: LPoly) -> QGraded:
    """``L^j -> t^(2j)``; cohomology of a smooth proper Tate-type space."""
    if any(c < 0 for c in chi):
        raise NegativeCoefficient(f"{chi} has a negative coefficient")
    return QGraded((2 * j, c) for j, c in enumerate(chi) if c)
