"""Stable trees with labelled legs and the closed twisted counts they give.

A stable tree with legs ``1..n`` is stored through its edge set: every edge
splits the legs into two sides of size at least two, and we record the side
not containing leg 1 as a bitmask (bit ``l-1`` for leg ``l``).  Two splits fit
in one tree iff those sides are nested or disjoint; a tree is a pairwise
compatible family.  The sorted tuple of masks is the canonical form.

A flag at a vertex is described by the set of legs reached through it, so a
vertex is the partition of the legs cut out by its flags.  Legs are exactly
the singleton blocks.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from ..algebra import LPoly
from .counting import normalize_type, trace_open

DEFAULT_CAP = int(os.environ.get("SECTOR_TREE_CAP", "9"))


class CapExceeded(ValueError):
    pass


def _bits(mask: int):
    i = 0
    while mask:
        if mask & 1:
            yield i
        mask >>= 1
        i += 1


def _popcount(mask: int) -> int:
    return bin(mask).count("1")


@dataclass(frozen=True)
class StableTree:
    n: int
    splits: tuple[int, ...]

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    def vertices(self) -> tuple[frozenset[int], ...]:
        """Each vertex as the frozenset of its flag blocks (bitmasks)."""
        full = self.full
        splits = self.splits
        out = []
        tops = [None] + list(splits)  # None stands for the root vertex
        for top in tops:
            region = full if top is None else top
            inner = [s for s in splits if s != region and (s & region) == s]
            maximal = [s for s in inner if not any(s != t and (s & t) == s for t in inner)]
            covered = 0
            for s in maximal:
                covered |= s
            blocks = set(maximal)
            blocks.update(1 << b for b in _bits(region & ~covered))
            if top is not None:
                blocks.add(full & ~top)
            out.append(frozenset(blocks))
        return tuple(out)

    def num_vertices(self) -> int:
        return len(self.splits) + 1

    def is_stable(self) -> bool:
        return all(len(v) >= 3 for v in self.vertices())

    def is_tree(self) -> bool:
        # connected and acyclic: |E| = |V| - 1 and every leg sits at one vertex
        verts = self.vertices()
        legs = [b for v in verts for b in v if _popcount(b) == 1]
        half_edges = sum(len(v) for v in verts) - len(legs)
        return sorted(legs) == [1 << i for i in range(self.n)] and half_edges == 2 * len(self.splits)

    def leg_sets(self) -> list[set[int]]:
        return [{b + 1 for b in _bits(s)} for s in self.splits]


def _compatible(a: int, b: int) -> bool:
    return (a & b) == 0 or (a & b) == a or (a & b) == b


@lru_cache(maxsize=None)
def all_splits(n: int) -> tuple[int, ...]:
    """Sides (not containing leg 1) of all admissible edges."""
    out = []
    for mask in range(1 << n):
        if mask & 1:
            continue
        size = _popcount(mask)
        if 2 <= size <= n - 2:
            out.append(mask)
    return tuple(out)


@lru_cache(maxsize=4)
def enumerate_stable_trees(n: int, cap: int | None = None) -> tuple[StableTree, ...]:
    """One tree per stratum of ``bar M_{0,n}``."""
    cap = DEFAULT_CAP if cap is None else cap
    if n < 3:
        raise ValueError("need n >= 3")
    if n > cap:
        raise CapExceeded(f"n = {n} exceeds the stable-tree cap {cap}")
    splits = all_splits(n)
    m = len(splits)
    compat = []
    for i in range(m):
        mask = 0
        for j in range(i + 1, m):
            if _compatible(splits[i], splits[j]):
                mask |= 1 << j
        compat.append(mask)

    out: list[StableTree] = []
    chosen: list[int] = []

    def extend(candidates: int):
        out.append(StableTree(n, tuple(splits[i] for i in chosen)))
        while candidates:
            low = candidates & -candidates
            j = low.bit_length() - 1
            candidates ^= low
            chosen.append(j)
            extend(candidates & compat[j])
            chosen.pop()

    extend((1 << m) - 1)
    return tuple(out)


# ---------------------------------------------------------------------------
# Permutation action


def permutation_of_type(cycle_type) -> tuple[int, ...]:
    """A permutation (images of ``1..n``) with the given cycle type."""
    perm = []
    start = 1
    for length in normalize_type(cycle_type):
        block = list(range(start, start + length))
        perm.extend(block[1:] + block[:1])
        start += length
    return tuple(perm)


def cycle_type_of(perm: Sequence[int]) -> tuple[int, ...]:
    n = len(perm)
    seen = [False] * (n + 1)
    lengths = []
    for s in range(1, n + 1):
        if seen[s]:
            continue
        length, x = 0, s
        while not seen[x]:
            seen[x] = True
            x = perm[x - 1]
            length += 1
        lengths.append(length)
    return tuple(sorted(lengths, reverse=True))


class _MaskAction:
    def __init__(self, perm: Sequence[int]):
        self.n = len(perm)
        self.full = (1 << self.n) - 1
        self.images = [1 << (perm[b] - 1) for b in range(self.n)]
        self._cache: dict[int, int] = {}

    def __call__(self, mask: int) -> int:
        out = self._cache.get(mask)
        if out is None:
            out = 0
            for b in _bits(mask):
                out |= self.images[b]
            self._cache[mask] = out
        return out

    def split(self, mask: int) -> int:
        img = self(mask)
        return self.full & ~img if img & 1 else img


def _block_cycle_type(blocks, act: _MaskAction, m: int) -> tuple[int, ...]:
    def step(b):
        for _ in range(m):
            b = act(b)
        return b

    seen = set()
    lengths = []
    for b in blocks:
        if b in seen:
            continue
        length, x = 0, b
        while x not in seen:
            seen.add(x)
            x = step(x)
            length += 1
        lengths.append(length)
    return tuple(sorted(lengths, reverse=True))


def tree_contribution(tree: StableTree, perm: Sequence[int]) -> LPoly | None:
    """Twisted count of the stratum of ``tree``; ``None`` if sigma moves it."""
    act = _MaskAction(perm)
    splits = set(tree.splits)
    if {act.split(s) for s in splits} != splits:
        return None
    return _fixed_tree_contribution(tree, act)


def _fixed_tree_contribution(tree: StableTree, act: _MaskAction) -> LPoly:
    verts = tree.vertices()
    index = {v: i for i, v in enumerate(verts)}
    image = [index[frozenset(act(b) for b in v)] for v in verts]
    seen = [False] * len(verts)
    out = LPoly([1])
    for s in range(len(verts)):
        if seen[s]:
            continue
        m, x = 0, s
        while not seen[x]:
            seen[x] = True
            x = image[x]
            m += 1
        ret = _block_cycle_type(verts[s], act, m)
        out = out * trace_open(len(verts[s]), ret).compose_power(m)
    return out


def trace_closed(n: int, perm: Sequence[int], cap: int | None = None) -> LPoly:
    """Trace of ``perm`` on ``e(bar M_{0,n})`` by summing over fixed strata."""
    perm = tuple(perm)
    if len(perm) != n or sorted(perm) != list(range(1, n + 1)):
        raise ValueError("perm must list the images of 1..n")
    act = _MaskAction(perm)
    total = LPoly()
    for tree in enumerate_stable_trees(n, cap):
        splits = tree.splits
        if all(act.split(s) in splits for s in splits):
            total = total + _fixed_tree_contribution(tree, act)
    return total


CLOSED_TABLE: dict[tuple[int, ...], LPoly] = {}


def trace_closed_type(n: int, cycle_type) -> LPoly:
    t = normalize_type(cycle_type)
    if sum(t) != n:
        raise ValueError(f"cycle type {t} is not a partition of {n}")
    out = CLOSED_TABLE.get(t)
    if out is None:
        out = CLOSED_TABLE[t] = trace_closed(n, permutation_of_type(t))
    return out
