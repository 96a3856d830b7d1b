"""Age (degree-shifting number) of the twisted sectors of ``M_g``."""

from __future__ import annotations

from fractions import Fraction
from math import floor, gcd

from . import admissible
from .admissible import AdmissibleDatum


def frac_part(x: Fraction) -> Fraction:
    return x - floor(x)


def sigma_indicator(k: int, i: int, N: int) -> int:
    """0 when ``k*i + gcd(i, N)`` is divisible by ``N``, else 1."""
    return 0 if (k * i + gcd(i, N)) % N == 0 else 1


def age(A: AdmissibleDatum) -> Fraction:
    """Closed form: base-genus term plus the weighted branch contributions."""
    N = A.N
    total = Fraction((3 * A.g_prime - 3) * (N - 1), 2)
    branch = Fraction(0)
    for i, di in enumerate(A.d, start=1):
        if not di:
            continue
        inner = sum(
            k * (frac_part(Fraction(k * i, N)) + sigma_indicator(k, i, N))
            for k in range(1, N)
        )
        branch += di * inner
    return total + branch / N


def age_by_weights(A: AdmissibleDatum) -> Fraction:
    """Same quantity, summed eigenspace by eigenspace.

    For each character ``k`` the multiplicity of weight ``k`` in the tangent
    space is ``3g'-3 + #{branch points with sigma = 1} + deg L_k``.
    """
    N = A.N
    total = Fraction(0)
    for k in range(1, N):
        mult = Fraction(3 * A.g_prime - 3)
        for i, di in enumerate(A.d, start=1):
            if sigma_indicator(k, i, N) == 1:
                mult += di
            mult += frac_part(Fraction(k * i, N)) * di
        total += k * mult
    return total / N


def checked_age(A: AdmissibleDatum) -> Fraction:
    a, b = age(A), age_by_weights(A)
    if a != b:
        raise AssertionError(f"age forms disagree on {A}: {a} != {b}")
    return a


def age_table(g: int) -> dict[AdmissibleDatum, Fraction]:
    return {A: checked_age(A) for A in admissible.twisted_sectors(g)}


def duality_defect(A: AdmissibleDatum) -> Fraction:
    """``age(A) + age(iota A) - (3g-3 - dim A)``; zero for every datum."""
    return (
        age(A)
        + age(admissible.involution(A))
        - (3 * A.g - 3 - admissible.sector_dimension(A))
    )
