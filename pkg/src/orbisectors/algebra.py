"""Exact arithmetic kernel.

Three value types live here:

* ``Rational`` -- an alias for :class:`fractions.Fraction`, always in lowest
  terms with a positive denominator.
* :class:`LPoly` -- a univariate integer polynomial.  The indeterminate is read
  as the finite-field size ``q`` while counting points and as the Tate class
  ``L`` when a result is reported; for polynomial-count spaces the two agree.
* :class:`QGraded` / :class:`BiGraded` -- finitely supported maps from rational
  degrees to nonnegative multiplicities, used for (orbifold) Poincare
  polynomials.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Iterable, Iterator, Mapping

Rational = Fraction


class NonExactDivision(ArithmeticError):
    """Polynomial division left a nonzero remainder."""


def as_rational(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, str):
        return Fraction(x)
    return Fraction(x)


def format_rational(x: Fraction) -> str:
    """``"p/q"`` when the denominator is > 1, the plain integer otherwise."""
    x = as_rational(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def format_power(var: str, e, latex: bool = False) -> str:
    """``var`` raised to a rational exponent; empty string for exponent 0."""
    e = as_rational(e)
    if e == 0:
        return ""
    if e == 1:
        return var
    if e.denominator == 1:
        if latex and abs(e.numerator) >= 10:
            return f"{var}^{{{e.numerator}}}"
        return f"{var}^{e.numerator}"
    if latex:
        return f"{var}^{{\\frac{{{e.numerator}}}{{{e.denominator}}}}}"
    return f"{var}^({e.numerator}/{e.denominator})"


# ---------------------------------------------------------------------------
# Integer polynomials


class LPoly:
    """Immutable polynomial with integer coefficients, index = exponent."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(a) for a in coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    def __setattr__(self, name, value):
        raise AttributeError("LPoly is immutable")

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> "LPoly":
        return cls([0] * exponent + [coeff])

    @classmethod
    def constant(cls, c: int) -> "LPoly":
        return cls([c])

    @classmethod
    def from_dict(cls, terms: Mapping[int, int]) -> "LPoly":
        if not terms:
            return cls()
        out = [0] * (max(terms) + 1)
        for e, c in terms.items():
            out[e] += c
        return cls(out)

    @property
    def degree(self) -> int | None:
        """Degree, or ``None`` for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else None

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, e: int) -> int:
        return self.coeffs[e] if 0 <= e < len(self.coeffs) else 0

    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def __iter__(self) -> Iterator[int]:
        return iter(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, int):
            other = LPoly([other])
        if not isinstance(other, LPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(("LPoly", self.coeffs))

    def __add__(self, other):
        other = _lift(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return LPoly(self.coeff(i) + other.coeff(i) for i in range(n))

    __radd__ = __add__

    def __neg__(self):
        return LPoly(-a for a in self.coeffs)

    def __sub__(self, other):
        return self + (-_lift(other))

    def __rsub__(self, other):
        return _lift(other) - self

    def __mul__(self, other):
        other = _lift(other)
        if not self.coeffs or not other.coeffs:
            return LPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return LPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        result, base = LPoly([1]), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __call__(self, x):
        """Evaluate by Horner's rule; works for ints, Fractions, LPolys."""
        acc = 0
        for a in reversed(self.coeffs):
            acc = acc * x + a
        return acc

    def compose_power(self, m: int) -> "LPoly":
        """Substitute ``q -> q**m``."""
        if m == 1 or not self.coeffs:
            return self
        out = [0] * (m * (len(self.coeffs) - 1) + 1)
        for i, a in enumerate(self.coeffs):
            out[m * i] = a
        return LPoly(out)

    def divmod(self, divisor: "LPoly") -> tuple["LPoly", "LPoly"]:
        """Division over Q restricted to integer quotients.

        The divisor must have leading coefficient +-1, which covers every
        divisor used in this package (``q**3 - q`` and monomials).
        """
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        lead = divisor.leading()
        if lead not in (1, -1):
            raise ValueError("divisor must be monic up to sign")
        rem = list(self.coeffs)
        dd = len(divisor.coeffs) - 1
        if len(rem) - 1 < dd:
            return LPoly(), self
        quot = [0] * (len(rem) - dd)
        for i in range(len(rem) - 1, dd - 1, -1):
            c = rem[i] * lead
            if c:
                quot[i - dd] = c
                for j, b in enumerate(divisor.coeffs):
                    rem[i - dd + j] -= c * b
        return LPoly(quot), LPoly(rem)

    def is_palindromic(self, top: int | None = None) -> bool:
        top = self.degree if top is None else top
        if top is None:
            return True
        if self.degree is not None and self.degree > top:
            return False
        return all(self.coeff(j) == self.coeff(top - j) for j in range(top + 1))

    def to_json(self) -> list[str]:
        return [str(a) for a in self.coeffs]

    @classmethod
    def from_json(cls, data) -> "LPoly":
        if isinstance(data, str):
            data = json.loads(data)
        return cls(int(a) for a in data)

    def format(self, var: str = "L") -> str:
        """Human/LaTeX style rendering, highest power first: ``L^2-L``."""
        if not self.coeffs:
            return "0"
        parts = []
        for e in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[e]
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if e == 0:
                body = str(a)
            else:
                mono = var if e == 1 else f"{var}^{e}" if e < 10 else f"{var}^{{{e}}}"
                body = mono if a == 1 else f"{a}{mono}"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += sign + body
        return out

    def __repr__(self):
        return f"LPoly({list(self.coeffs)!r})"

    def __str__(self):
        return self.format("L")


def _lift(x) -> LPoly:
    if isinstance(x, LPoly):
        return x
    if isinstance(x, int):
        return LPoly([x])
    raise TypeError(f"cannot use {type(x).__name__} as LPoly")


Q = LPoly([0, 1])


def lpoly_exact_divide(numerator: LPoly, divisor: LPoly) -> LPoly:
    """Quotient of an exact division; raises :class:`NonExactDivision` otherwise."""
    if divisor.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    quot, rem = numerator.divmod(divisor)
    if not rem.is_zero():
        raise NonExactDivision(f"{numerator!r} / {divisor!r} leaves {rem!r}")
    return quot


# ---------------------------------------------------------------------------
# Rationally graded polynomials


class QGraded:
    """Map from rational degree to positive integer multiplicity."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping | Iterable = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Fraction, int] = {}
        for deg, mult in items:
            deg = as_rational(deg)
            mult = int(mult)
            if mult < 0:
                raise ValueError(f"negative multiplicity {mult} at degree {deg}")
            acc[deg] = acc.get(deg, 0) + mult
        object.__setattr__(
            self, "_terms", tuple(sorted((d, m) for d, m in acc.items() if m))
        )

    def __setattr__(self, name, value):
        raise AttributeError("QGraded is immutable")

    @property
    def terms(self) -> dict[Fraction, int]:
        return dict(self._terms)

    def items(self):
        return iter(self._terms)

    def degrees(self) -> list[Fraction]:
        return [d for d, _ in self._terms]

    def __getitem__(self, deg) -> int:
        return self.terms.get(as_rational(deg), 0)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if not isinstance(other, QGraded):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(("QGraded", self._terms))

    def __add__(self, other: "QGraded") -> "QGraded":
        return QGraded(list(self._terms) + list(other._terms))

    def subtract(self, other: "QGraded") -> dict[Fraction, int]:
        """Signed difference; may contain negative entries (not a QGraded)."""
        out = self.terms
        for d, m in other.items():
            out[d] = out.get(d, 0) - m
        return {d: m for d, m in out.items() if m}

    def total(self) -> int:
        return sum(m for _, m in self._terms)

    def at_one(self) -> int:
        return self.total()

    def max_degree(self) -> Fraction | None:
        return self._terms[-1][0] if self._terms else None

    def to_json(self) -> list[dict]:
        return [{"deg": format_rational(d), "mult": m} for d, m in self._terms]

    @classmethod
    def from_json(cls, data) -> "QGraded":
        if isinstance(data, str):
            data = json.loads(data)
        return cls((Fraction(t["deg"]), t["mult"]) for t in data)

    def format(self, var: str = "t", latex: bool = False) -> str:
        if not self._terms:
            return "0"
        parts = []
        for d, m in self._terms:
            mono = format_power(var, d, latex)
            if not mono:
                parts.append(str(m))
            elif m == 1:
                parts.append(mono)
            else:
                parts.append(f"{m} {mono}" if latex else f"{m}{mono}")
        return " + ".join(parts)

    def __repr__(self):
        return "QGraded({%s})" % ", ".join(f"{format_rational(d)!r}: {m}" for d, m in self._terms)


def qgraded_shift(p: QGraded, delta) -> QGraded:
    delta = as_rational(delta)
    if delta < 0:
        raise ValueError("shift must be nonnegative")
    return QGraded((d + delta, m) for d, m in p.items())


def is_palindromic(p: QGraded, top) -> bool:
    top = as_rational(top)
    terms = p.terms
    return all(terms.get(top - d, 0) == m for d, m in terms.items())


class BiGraded:
    """Map from (L-exponent, t-degree), both rational, to multiplicity."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping | Iterable = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[tuple[Fraction, Fraction], int] = {}
        for (p, d), mult in items:
            key = (as_rational(p), as_rational(d))
            if mult < 0:
                raise ValueError("negative multiplicity")
            acc[key] = acc.get(key, 0) + int(mult)
        object.__setattr__(
            self, "_terms", tuple(sorted((k, m) for k, m in acc.items() if m))
        )

    def __setattr__(self, name, value):
        raise AttributeError("BiGraded is immutable")

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return iter(self._terms)

    def __eq__(self, other):
        if not isinstance(other, BiGraded):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(("BiGraded", self._terms))

    def __add__(self, other: "BiGraded") -> "BiGraded":
        return BiGraded(list(self._terms) + list(other._terms))

    def specialize_L(self) -> QGraded:
        """Set ``L = 1``."""
        return QGraded((d, m) for (_, d), m in self._terms)

    def to_json(self) -> list[dict]:
        return [
            {"L": format_rational(p), "deg": format_rational(d), "mult": m}
            for (p, d), m in sorted(self._terms, key=lambda t: (t[0][1], t[0][0]))
        ]

    @classmethod
    def from_json(cls, data) -> "BiGraded":
        if isinstance(data, str):
            data = json.loads(data)
        return cls(((Fraction(t["L"]), Fraction(t["deg"])), t["mult"]) for t in data)

    def format(self, latex: bool = False) -> str:
        """Terms ``m L^p t^d`` ordered by ``t``-degree, then by ``L``-exponent."""
        if not self._terms:
            return "0"
        parts = []
        for (p, d), m in sorted(self._terms, key=lambda t: (t[0][1], t[0][0])):
            mono = format_power("L", p, latex) + format_power("t", d, latex)
            if not mono:
                parts.append(str(m))
            else:
                parts.append(mono if m == 1 else f"{m}{mono}")
        return " + ".join(parts)

    def __repr__(self):
        body = ", ".join(
            f"({format_rational(p)}, {format_rational(d)}): {m}" for (p, d), m in self._terms
        )
        return f"BiGraded({{{body}}})"
