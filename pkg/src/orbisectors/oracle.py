"""Brute-force twisted point counts over explicit finite fields.

Independent of the symbolic counting code: points of ``P^1`` are enumerated
as actual elements of ``F_{p^D}``, built from a primitive polynomial found by
search, and Frobenius is computed as an explicit power map.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product
from math import lcm

INFINITY = -1


def _prime_power(q: int) -> tuple[int, int]:
    for p in range(2, q + 1):
        if q % p == 0:
            e, r = 0, q
            while r % p == 0:
                r //= p
                e += 1
            if r != 1:
                raise ValueError(f"{q} is not a prime power")
            return p, e
    raise ValueError(f"{q} is not a prime power")


def _prime_factors(n: int) -> list[int]:
    out, r = [], 2
    while r * r <= n:
        if n % r == 0:
            out.append(r)
            while n % r == 0:
                n //= r
        r += 1
    if n > 1:
        out.append(n)
    return out


class FiniteField:
    """``F_{p^D}`` with elements encoded as base-``p`` integers."""

    def __init__(self, p: int, D: int):
        self.p, self.D = p, D
        self.size = p**D
        self.modulus, self.exp = self._primitive_table()
        self.log = {x: i for i, x in enumerate(self.exp)}

    def _times_x(self, digits: list[int], modulus: list[int]) -> list[int]:
        # digits: coefficients of 1..x^{D-1}; modulus: monic, low to high, length D+1
        p, D = self.p, self.D
        top = digits[-1]
        shifted = [0] + digits[:-1]
        return [(shifted[i] - top * modulus[i]) % p for i in range(D)]

    def _mulmod(self, a: list[int], b: list[int], modulus: list[int]) -> list[int]:
        p, D = self.p, self.D
        prod_ = [0] * (2 * D - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    prod_[i + j] += x * y
        for k in range(2 * D - 2, D - 1, -1):
            c = prod_[k] % p
            if c:
                for i in range(D + 1):
                    prod_[k - D + i] -= c * modulus[i]
        return [c % p for c in prod_[:D]]

    def _x_power(self, k: int, modulus: list[int]) -> list[int]:
        D = self.D
        result = [1] + [0] * (D - 1)
        base = ([0, 1] + [0] * (D - 2)) if D > 1 else [(-modulus[0]) % self.p]
        while k:
            if k & 1:
                result = self._mulmod(result, base, modulus)
            base = self._mulmod(base, base, modulus)
            k >>= 1
        return result

    def _encode(self, digits: list[int]) -> int:
        out = 0
        for c in reversed(digits):
            out = out * self.p + c
        return out

    def _primitive_table(self):
        p, D = self.p, self.D
        order = self.size - 1
        one = [1] + [0] * (D - 1)
        primes = _prime_factors(order)
        for low in product(range(p), repeat=D):
            if low[0] == 0:
                continue
            modulus = list(low) + [1]
            # x is primitive iff x^order = 1 and x^(order/r) != 1 for each prime r
            if self._x_power(order, modulus) != one:
                continue
            if any(self._x_power(order // r, modulus) == one for r in primes):
                continue
            cur, table = one, []
            for _ in range(order):
                table.append(self._encode(cur))
                cur = self._times_x(cur, modulus)
            return modulus, table
        raise RuntimeError(f"no primitive polynomial of degree {D} over F_{p}")

    def power(self, x: int, k: int) -> int:
        if x == 0:
            return 0
        return self.exp[(self.log[x] * k) % (self.size - 1)]

    def subfield(self, size: int) -> list[int]:
        """Elements fixed by ``x -> x**size``."""
        order = self.size - 1
        if order % (size - 1):
            raise ValueError(f"F_{size} is not a subfield of F_{self.size}")
        step = order // (size - 1)
        return [0] + [self.exp[i] for i in range(0, order, step)]


@lru_cache(maxsize=None)
def _field(p: int, D: int) -> FiniteField:
    return FiniteField(p, D)


def _frobenius(F: FiniteField, q: int, pt: int) -> int:
    return pt if pt == INFINITY else F.power(pt, q)


def count_fixed_configurations(cycle_type, q: int) -> int:
    """Ordered n-tuples of distinct points of ``P^1`` with ``F(x_i) = x_sigma(i)``."""
    p, e = _prime_power(q)
    lengths = sorted(cycle_type, reverse=True)
    M = lcm(*lengths)
    F = _field(p, e * M)
    pools = []
    for ell in lengths:
        pts = F.subfield(q**ell) + [INFINITY]
        pools.append(pts)

    count = 0

    def place(j: int, used: set):
        nonlocal count
        if j == len(lengths):
            count += 1
            return
        for x in pools[j]:
            orbit = [x]
            for _ in range(lengths[j] - 1):
                orbit.append(_frobenius(F, q, orbit[-1]))
            if len(set(orbit)) != lengths[j] or used.intersection(orbit):
                continue
            place(j + 1, used.union(orbit))

    place(0, set())
    return count


def brute_force_trace_open(cycle_type, q: int) -> int:
    """Twisted count on ``M_{0,n}``: fixed configurations over ``|PGL_2(F_q)|``."""
    total = count_fixed_configurations(cycle_type, q)
    pgl = q**3 - q
    if total % pgl:
        raise ArithmeticError(f"{total} configurations not divisible by |PGL_2| = {pgl}")
    return total // pgl
