"""Admissible data: the discrete invariants of cyclic covers of curves.

A datum ``(g', N; d_1, ..., d_{N-1})`` records a connected ``mu_N``-cover of a
genus ``g'`` curve by a genus ``g`` curve with ``d_i`` branch points of local
monodromy ``i``.  Twisted sectors of the inertia stack of ``M_g`` are in
bijection with the data whose moduli of connected covers is nonempty.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import reduce
from itertools import combinations_with_replacement, product
from math import factorial, gcd, prod
from typing import Iterator


class InvalidGenus(ValueError):
    pass


class InvalidDatum(ValueError):
    pass


@dataclass(frozen=True)
class AdmissibleDatum:
    g: int
    g_prime: int
    N: int
    d: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "d", tuple(int(x) for x in self.d))
        if self.N < 2:
            raise InvalidDatum(f"order must be >= 2, got {self.N}")
        if len(self.d) != self.N - 1:
            raise InvalidDatum(f"expected {self.N - 1} branch degrees, got {len(self.d)}")
        if self.g_prime < 0 or any(x < 0 for x in self.d):
            raise InvalidDatum("negative entry in datum")

    @property
    def sort_key(self):
        return (self.g, self.g_prime, self.N, self.d)

    def __lt__(self, other: "AdmissibleDatum"):
        return self.sort_key < other.sort_key

    @property
    def total_branch(self) -> int:
        return sum(self.d)

    def label(self) -> str:
        """``(g',N;d_1,...,d_{N-1})``."""
        return f"({self.g_prime},{self.N};{','.join(map(str, self.d))})"

    def table_label(self) -> str:
        """Genus-0 table notation: ``(N;d_1,...)``, digits run together for N > 9."""
        sep = "" if self.N > 9 else ","
        return f"({self.N};{sep.join(map(str, self.d))})"

    def __str__(self):
        return self.label()

    def to_json(self) -> dict:
        return {"g": self.g, "g_prime": self.g_prime, "N": self.N, "d": list(self.d)}

    @classmethod
    def from_json(cls, data: dict) -> "AdmissibleDatum":
        return cls(data["g"], data["g_prime"], data["N"], tuple(data["d"]))


_LABEL = re.compile(r"^\(\s*(\d+)\s*,\s*(\d+)\s*;\s*([\d,\s]*)\)$")
_TABLE_LABEL = re.compile(r"^\(\s*(\d+)\s*;\s*([\d,\s]*)\)$")


def parse_datum(text: str, g: int) -> AdmissibleDatum:
    """Parse ``(g',N;d_1,...)`` or the genus-0 shorthand ``(N;d_1,...)``.

    In the shorthand, a comma-free digit string is read one digit per entry.
    """
    text = text.strip()
    m = _LABEL.match(text)
    if m:
        gp, n, body = int(m.group(1)), int(m.group(2)), m.group(3)
    else:
        m = _TABLE_LABEL.match(text)
        if not m:
            raise InvalidDatum(f"cannot parse datum {text!r}")
        gp, n, body = 0, int(m.group(1)), m.group(2)
    body = body.replace(" ", "")
    if "," in body or not body:
        d = [int(x) for x in body.split(",") if x != ""]
    else:
        d = [int(ch) for ch in body] if len(body) == n - 1 else [int(body)]
    return AdmissibleDatum(g, gp, n, tuple(d))


def ramification_weight(i: int, N: int) -> int:
    """Contribution of one branch point of monodromy ``i`` to Riemann-Hurwitz."""
    c = gcd(i, N)
    return c * (N // c - 1)


def riemann_hurwitz_holds(A: AdmissibleDatum) -> bool:
    rhs = A.N * (2 * A.g_prime - 2) + sum(
        di * ramification_weight(i, A.N) for i, di in enumerate(A.d, start=1)
    )
    return 2 * A.g - 2 == rhs


def structural_equation_holds(A: AdmissibleDatum) -> bool:
    return sum(i * di for i, di in enumerate(A.d, start=1)) % A.N == 0


def is_admissible(A: AdmissibleDatum) -> bool:
    return (
        A.g >= 2
        and A.g_prime <= A.g
        and riemann_hurwitz_holds(A)
        and structural_equation_holds(A)
    )


def connectedness_k(A: AdmissibleDatum) -> int:
    """gcd of ``N`` and every monodromy ``i`` that actually occurs."""
    return reduce(gcd, (i for i, di in enumerate(A.d, start=1) if di), A.N)


def order_bound(g: int) -> int:
    """Hurwitz bound on the order of a cyclic automorphism of a genus-g curve.

    For quotient genus 0 the orbifold Euler characteristic is at least 1/42,
    so ``N <= 84(g-1)``; positive quotient genus gives smaller bounds.
    """
    return 84 * (g - 1)


def _weight_counts(weights: list[int], target: int) -> Iterator[tuple[int, ...]]:
    """All count vectors c with sum c_j * weights[j] == target."""
    if not weights:
        if target == 0:
            yield ()
        return
    w, rest = weights[0], weights[1:]
    for c in range(target // w + 1):
        for tail in _weight_counts(rest, target - c * w):
            yield (c,) + tail


def _residue_reachable(N: int, classes: list[list[int]], counts: tuple[int, ...]) -> bool:
    reach = {0}
    for members, c in zip(classes, counts):
        for _ in range(c):
            reach = {(r + i) % N for r in reach for i in members}
    return 0 in reach


def _data_for(g: int, g_prime: int, N: int) -> Iterator[AdmissibleDatum]:
    target = 2 * g - 2 - N * (2 * g_prime - 2)
    if target < 0:
        return
    divisors = [c for c in range(1, N) if N % c == 0]
    classes = [[i for i in range(1, N) if gcd(i, N) == c] for c in divisors]
    weights = [N - c for c in divisors]
    for counts in _weight_counts(weights, target):
        if not _residue_reachable(N, classes, counts):
            continue
        choices = [
            list(combinations_with_replacement(members, c))
            for members, c in zip(classes, counts)
        ]
        for picks in product(*choices):
            d = [0] * (N - 1)
            for pick in picks:
                for i in pick:
                    d[i - 1] += 1
            if sum(i * di for i, di in enumerate(d, start=1)) % N == 0:
                yield AdmissibleDatum(g, g_prime, N, tuple(d))


def enumerate_admissible(g: int) -> list[AdmissibleDatum]:
    """Every g-admissible datum, sorted by ``(g', N, d)``.

    Connected or not; see :func:`is_twisted_sector` for the filter.
    """
    if not isinstance(g, int) or g < 2:
        raise InvalidGenus(f"genus must be an integer >= 2, got {g!r}")
    found = set()
    for g_prime in range(g + 1):
        for N in range(2, order_bound(g) + 1):
            found.update(_data_for(g, g_prime, N))
    return sorted(found)


def is_twisted_sector(A: AdmissibleDatum) -> bool:
    """Whether the moduli of connected covers with datum ``A`` is nonempty.

    Over a rational base the branch divisors fix the line bundle, so the cover
    is connected exactly when ``k == 1``.  Over a base of positive genus a
    component of every exact order dividing ``k`` exists, the order-``k`` one
    parametrizing connected covers.
    """
    if A.g_prime == 0:
        return connectedness_k(A) == 1
    return True


def sector_dimension(A: AdmissibleDatum) -> int:
    return 3 * A.g_prime - 3 + A.total_branch


def involution(A: AdmissibleDatum) -> AdmissibleDatum:
    """Datum of the inverse automorphism: monodromy ``i`` becomes ``N - i``."""
    return AdmissibleDatum(A.g, A.g_prime, A.N, tuple(reversed(A.d)))


def twisted_sectors(g: int) -> list[AdmissibleDatum]:
    return [A for A in enumerate_admissible(g) if is_twisted_sector(A)]


# ---------------------------------------------------------------------------
# Partitions and Young subgroup classes


def partitions(n: int, largest: int | None = None) -> Iterator[tuple[int, ...]]:
    """Partitions of ``n`` as non-increasing tuples, in reverse lex order."""
    if largest is None:
        largest = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def z_lambda(parts: tuple[int, ...]) -> int:
    """Order of the centralizer of a permutation with cycle type ``parts``."""
    out = 1
    for m in set(parts):
        a = parts.count(m)
        out *= m**a * factorial(a)
    return out


def class_size(parts: tuple[int, ...]) -> int:
    return factorial(sum(parts)) // z_lambda(parts)


def young_classes(A: AdmissibleDatum) -> list[tuple[tuple[int, ...], int]]:
    """Conjugacy classes of ``S_{d_1} x ... x S_{d_{N-1}}``.

    Each entry is ``(cycle type on all d points, class size)``; one entry per
    tuple of partitions, so equal cycle types may repeat.
    """
    blocks = [di for di in A.d if di]
    out = []
    for combo in product(*(list(partitions(b)) for b in blocks)):
        cycle_type = tuple(sorted((p for lam in combo for p in lam), reverse=True))
        size = prod(class_size(lam) for lam in combo)
        out.append((cycle_type, size))
    return out


def young_order(A: AdmissibleDatum) -> int:
    return prod(factorial(di) for di in A.d)


@dataclass(frozen=True)
class SectorShape:
    """Combinatorial invariants of the sector attached to a datum."""

    datum: AdmissibleDatum
    total_branch: int
    dimension: int
    k: int
    blocks: tuple[int, ...]
    connected: bool
    components: tuple[str, ...] = field(default=("order_k",))
    genus0_pipeline: bool = True

    def to_json(self) -> dict:
        rec = self.datum.to_json()
        rec.update(
            k=self.k,
            dim=self.dimension,
            connected=self.connected,
            components=list(self.components),
        )
        return rec


def sector_shape(A: AdmissibleDatum) -> SectorShape:
    k = connectedness_k(A)
    connected = is_twisted_sector(A)
    components: tuple[str, ...] = ("order_k",)
    if A.g_prime > 0 and k > 1:
        # only the exact-order-k component carries connected covers
        components = ("order_k",) + tuple(
            f"order_{e}:excluded" for e in range(1, k) if k % e == 0
        )
    return SectorShape(
        datum=A,
        total_branch=A.total_branch,
        dimension=sector_dimension(A),
        k=k,
        blocks=A.d,
        connected=connected,
        components=components,
        genus0_pipeline=A.g_prime == 0,
    )
