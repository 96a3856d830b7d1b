"""Twisted Frobenius counts on the open moduli space ``M_{0,n}``.

A permutation ``sigma`` of the marked points composed with Frobenius fixes a
configuration exactly when each ``l``-cycle of ``sigma`` runs through one
Frobenius orbit of a point of exact degree ``l``.  Since ``PGL_2`` is connected
and acts freely on configurations of at least three points, dividing the
configuration count by ``|PGL_2(F_q)|`` gives the trace of ``sigma`` on the
compactly supported Euler characteristic of ``M_{0,n}``, as a polynomial in q.
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache

from ..algebra import LPoly, Q, lpoly_exact_divide

PGL2_ORDER = Q**3 - Q


def mobius(n: int) -> int:
    if n < 1:
        raise ValueError("mobius is defined on positive integers")
    result, p, m = 1, 2, n
    while p * p <= m:
        if m % p == 0:
            m //= p
            if m % p == 0:
                return 0
            result = -result
        p += 1
    if m > 1:
        result = -result
    return result


@lru_cache(maxsize=None)
def exact_degree_count(ell: int) -> LPoly:
    """Points of ``P^1`` whose residue field is exactly ``F_{q^ell}``."""
    if ell < 1:
        raise ValueError("ell must be positive")
    out = LPoly()
    for m in range(1, ell + 1):
        if ell % m == 0:
            out = out + mobius(ell // m) * (Q**m + 1)
    return out


def normalize_type(cycle_type) -> tuple[int, ...]:
    t = tuple(sorted((int(x) for x in cycle_type), reverse=True))
    if any(x < 1 for x in t):
        raise ValueError(f"bad cycle type {cycle_type!r}")
    return t


def fixed_configurations(cycle_type) -> LPoly:
    """Ordered configurations on ``P^1`` fixed by ``sigma F``, as a polynomial in q."""
    out = LPoly([1])
    for ell, a in Counter(normalize_type(cycle_type)).items():
        r = exact_degree_count(ell)
        for j in range(a):
            out = out * (r - j * ell)
    return out


OPEN_TABLE: dict[tuple[int, ...], LPoly] = {}


def trace_open(n: int, cycle_type) -> LPoly:
    """Trace of a permutation of the given cycle type on ``e_c(M_{0,n})``."""
    t = normalize_type(cycle_type)
    if n < 3:
        raise ValueError("M_{0,n} needs n >= 3")
    if sum(t) != n:
        raise ValueError(f"cycle type {t} is not a partition of {n}")
    out = OPEN_TABLE.get(t)
    if out is None:
        out = OPEN_TABLE[t] = lpoly_exact_divide(fixed_configurations(t), PGL2_ORDER)
    return out
