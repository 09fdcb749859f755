"""Matroids as explicit basis families over bitmask ground sets.

Subsets of the ground set ``{0, ..., n-1}`` are plain ``int`` bitmasks: bit
``i`` set means element ``i`` is present.  A :class:`Matroid` stores its
bases as a sorted tuple of such masks.  All operations are pure functions;
the per-matroid lookup tables (rank of every subset, flats, cyclic sets) are
computed lazily once and cached on the instance.

>>> m = validate(4, 2, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])
>>> rank(m, mask_of([2, 3]))
1
>>> elements(closure(m, mask_of([2])))
(2, 3)
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from math import comb
from typing import Iterable, Union

import numpy as np

from .errors import (
    ElementOutOfRange,
    EmptyBasisList,
    EmptyGroundSet,
    ExchangeAxiomViolation,
    GroundSetTooLarge,
    MixedBasisSizes,
)

MAX_N = 16

SetLike = Union[int, Iterable[int]]


# ---------------------------------------------------------------------------
# bitmask helpers
# ---------------------------------------------------------------------------

def mask_of(items: Iterable[int]) -> int:
    mask = 0
    for i in items:
        mask |= 1 << i
    return mask


def elements(mask: int) -> tuple[int, ...]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def full_mask(n: int) -> int:
    return (1 << n) - 1


def popcount(mask: int) -> int:
    return mask.bit_count()


def format_set(mask: int) -> str:
    """Comma-separated ascending elements, e.g. ``0,2,3``; empty set is ``''``."""
    return ",".join(map(str, elements(mask)))


def _as_mask(s: SetLike) -> int:
    if isinstance(s, (int, np.integer)):
        return int(s)
    return mask_of(s)


def _check_subset(n: int, s: SetLike) -> int:
    mask = _as_mask(s)
    if mask < 0 or mask >> n:
        raise ElementOutOfRange(f"set {mask:#x} has elements outside 0..{n - 1}")
    return mask


def compact(mask: int, keep: tuple[int, ...]) -> int:
    """Relabel ``mask`` (restricted to ``keep``) onto ``0..len(keep)-1``."""
    out = 0
    for j, e in enumerate(keep):
        if mask >> e & 1:
            out |= 1 << j
    return out


# popcount of every 16-bit mask; rank tables index into this
_POP16 = np.array([i.bit_count() for i in range(1 << 16)], dtype=np.int8)


# ---------------------------------------------------------------------------
# the matroid type
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Matroid:
    """A matroid on ``{0, ..., n-1}`` given by its bases.

    Instances are expected to be built by :func:`validate` or by the
    operations in this module, which preserve the invariants.  Equality is
    equality of labelled basis families.
    """

    n: int
    r: int
    bases: tuple[int, ...]

    def __repr__(self):
        return f"Matroid(n={self.n}, r={self.r}, bases={len(self.bases)})"

    @property
    def ground(self) -> int:
        return full_mask(self.n)

    @cached_property
    def basis_set(self) -> frozenset:
        return frozenset(self.bases)

    @cached_property
    def rank_table(self) -> np.ndarray:
        """``rank_table[S]`` is the rank of the subset with mask ``S``."""
        n = self.n
        size = 1 << n
        idx = np.arange(size)
        indep = np.zeros(size, dtype=bool)
        indep[list(self.bases)] = True
        for i in range(n):
            bit = 1 << i
            lo = idx[(idx & bit) == 0]
            indep[lo] |= indep[lo | bit]
        table = np.where(indep, _POP16[:size], 0).astype(np.int8)
        for i in range(n):
            bit = 1 << i
            hi = idx[(idx & bit) != 0]
            table[hi] = np.maximum(table[hi], table[hi ^ bit])
        return table

    @cached_property
    def flat_table(self) -> np.ndarray:
        """Boolean array: is subset ``S`` a flat."""
        rk = self.rank_table
        idx = np.arange(1 << self.n)
        out = np.ones(1 << self.n, dtype=bool)
        for i in range(self.n):
            bit = 1 << i
            lo = idx[(idx & bit) == 0]
            out[lo] &= rk[lo | bit] > rk[lo]
        return out

    @cached_property
    def cyclic_table(self) -> np.ndarray:
        """Boolean array: does the restriction to ``S`` have no coloop."""
        rk = self.rank_table
        idx = np.arange(1 << self.n)
        out = np.ones(1 << self.n, dtype=bool)
        for i in range(self.n):
            bit = 1 << i
            hi = idx[(idx & bit) != 0]
            out[hi] &= rk[hi ^ bit] == rk[hi]
        return out

    @cached_property
    def _circuits(self) -> tuple[int, ...]:
        rk = self.rank_table
        size = 1 << self.n
        idx = np.arange(size)
        pop = _POP16[:size]
        minimal = rk == pop - 1
        for i in range(self.n):
            bit = 1 << i
            hi = idx[(idx & bit) != 0]
            minimal[hi] &= rk[hi ^ bit] == pop[hi] - 1
        found = idx[minimal]
        return tuple(sorted(found.tolist(), key=lambda m: (m.bit_count(), m)))

    @cached_property
    def _components(self) -> tuple[int, ...]:
        parent = list(range(self.n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for c in self._circuits:
            items = elements(c)
            root = find(items[0])
            for e in items[1:]:
                parent[find(e)] = root
        blocks: dict[int, int] = {}
        for e in range(self.n):
            blocks[find(e)] = blocks.get(find(e), 0) | (1 << e)
        return tuple(sorted(blocks.values(), key=lambda m: (m & -m)))


# ---------------------------------------------------------------------------
# construction and validation
# ---------------------------------------------------------------------------

def find_exchange_violation(bases: Iterable[int]):
    """Return ``(B1, B2, e)`` breaking basis exchange, or ``None``."""
    bases = list(bases)
    lookup = set(bases)
    for b1 in bases:
        for b2 in bases:
            diff = b1 & ~b2
            if not diff:
                continue
            other = elements(b2 & ~b1)
            for e in elements(diff):
                base = b1 & ~(1 << e)
                if not any((base | (1 << f)) in lookup for f in other):
                    return b1, b2, e
    return None


def validate(n: int, r: int, bases: Iterable[SetLike]) -> Matroid:
    """Build a :class:`Matroid` after checking every basis axiom.

    ``bases`` may hold masks or iterables of element indices.  Duplicates
    are dropped and the result is sorted.
    """
    if n > MAX_N:
        raise GroundSetTooLarge(f"ground set of size {n} exceeds the cap of {MAX_N}")
    if n < 0 or not 0 <= r <= n:
        raise MixedBasisSizes(f"rank {r} is impossible on {n} elements")
    masks = sorted({_check_subset(n, b) for b in bases})
    if not masks:
        raise EmptyBasisList("a matroid needs at least one basis")
    for b in masks:
        if popcount(b) != r:
            raise MixedBasisSizes(f"basis {{{format_set(b)}}} does not have {r} elements")
    bad = find_exchange_violation(masks)
    if bad is not None:
        b1, b2, e = bad
        raise ExchangeAxiomViolation(
            f"no f in {{{format_set(b2 & ~b1)}}} exchanges element {e} of "
            f"{{{format_set(b1)}}} towards {{{format_set(b2)}}}",
            pair=(b1, b2),
            element=e,
        )
    return Matroid(n, r, tuple(masks))


def uniform(r: int, n: int) -> Matroid:
    return Matroid(n, r, tuple(sorted(mask_of(c) for c in combinations(range(n), r))))


# ---------------------------------------------------------------------------
# rank, closure, circuits, cyclic flats
# ---------------------------------------------------------------------------

def rank(m: Matroid, s: SetLike) -> int:
    return int(m.rank_table[_check_subset(m.n, s)])


def closure(m: Matroid, s: SetLike) -> int:
    s = _check_subset(m.n, s)
    rk = m.rank_table
    k = rk[s]
    out = s
    for e in range(m.n):
        if not s >> e & 1 and rk[s | (1 << e)] == k:
            out |= 1 << e
    return out


def is_flat(m: Matroid, s: SetLike) -> bool:
    return bool(m.flat_table[_check_subset(m.n, s)])


def is_independent(m: Matroid, s: SetLike) -> bool:
    s = _check_subset(m.n, s)
    return int(m.rank_table[s]) == popcount(s)


def circuits(m: Matroid) -> list[int]:
    """All circuits, ordered by size then mask."""
    return list(m._circuits)


def is_cyclic(m: Matroid, s: SetLike) -> bool:
    """A set is cyclic when it is empty or its restriction has no coloop."""
    return bool(m.cyclic_table[_check_subset(m.n, s)])


def flats(m: Matroid) -> list[int]:
    found = np.flatnonzero(m.flat_table).tolist()
    return sorted(found, key=lambda f: (popcount(f), f))


def cyclic_flats(m: Matroid) -> list[int]:
    """All cyclic flats, ascending by cardinality then mask value."""
    found = np.flatnonzero(m.flat_table & m.cyclic_table).tolist()
    return sorted(found, key=lambda f: (popcount(f), f))


def is_proper(m: Matroid, f: SetLike) -> bool:
    return 0 < rank(m, f) < m.r


def proper_cyclic_flats(m: Matroid) -> list[int]:
    rk = m.rank_table
    return [z for z in cyclic_flats(m) if 0 < rk[z] < m.r]


def loops(m: Matroid) -> int:
    return closure(m, 0)


def coloops(m: Matroid) -> int:
    out = m.ground
    for b in m.bases:
        out &= b
    return out


# ---------------------------------------------------------------------------
# duality and minors
# ---------------------------------------------------------------------------

def dual(m: Matroid) -> Matroid:
    full = m.ground
    return Matroid(m.n, m.n - m.r, tuple(sorted(full ^ b for b in m.bases)))


def surviving(n: int, removed: int) -> tuple[int, ...]:
    """Original labels of the elements left after removing ``removed``.

    Position ``j`` of the result is the old label of new element ``j``.
    """
    return tuple(e for e in range(n) if not removed >> e & 1)


def restrict(m: Matroid, z: SetLike) -> Matroid:
    """``M|Z`` relabelled onto ``0..|Z|-1`` preserving order."""
    z = _check_subset(m.n, z)
    if not z:
        raise EmptyGroundSet("restriction to the empty set")
    k = int(m.rank_table[z])
    keep = elements(z)
    new = {compact(b & z, keep) for b in m.bases if popcount(b & z) == k}
    return Matroid(len(keep), k, tuple(sorted(new)))


def delete(m: Matroid, x: SetLike) -> Matroid:
    x = _check_subset(m.n, x)
    return restrict(m, m.ground & ~x)


def contract(m: Matroid, x: SetLike) -> Matroid:
    """``M/X`` relabelled onto the complement of ``X`` preserving order."""
    x = _check_subset(m.n, x)
    rest = m.ground & ~x
    if not rest:
        raise EmptyGroundSet("contraction of the whole ground set")
    k = int(m.rank_table[x])
    keep = elements(rest)
    new = {compact(b & rest, keep) for b in m.bases if popcount(b & x) == k}
    return Matroid(len(keep), m.r - k, tuple(sorted(new)))


def minor(m: Matroid, contracted: SetLike = 0, deleted: SetLike = 0):
    """Return ``(M / C \\ D, labels)`` where ``labels[j]`` is the old name of ``j``."""
    c = _check_subset(m.n, contracted)
    d = _check_subset(m.n, deleted)
    if c & d:
        raise ValueError("contracted and deleted sets overlap")
    rest = m.ground & ~(c | d)
    if not rest:
        raise EmptyGroundSet("minor with empty ground set")
    k_c = int(m.rank_table[c])
    # bases of M/C\D: maximal sets B - C among bases meeting C in a basis of C
    pieces = [b & rest for b in m.bases if popcount(b & c) == k_c]
    k = max(popcount(p) for p in pieces)
    keep = elements(rest)
    new = {compact(p, keep) for p in pieces if popcount(p) == k}
    return Matroid(len(keep), k, tuple(sorted(new))), keep


def relabel(m: Matroid, perm) -> Matroid:
    """Send element ``e`` to ``perm[e]``."""
    out = []
    for b in m.bases:
        nb = 0
        for e in elements(b):
            nb |= 1 << perm[e]
        out.append(nb)
    return Matroid(m.n, m.r, tuple(sorted(out)))


def direct_sum(m1: Matroid, m2: Matroid) -> Matroid:
    n = m1.n + m2.n
    if n > MAX_N:
        raise GroundSetTooLarge(f"direct sum has {n} elements")
    shift = m1.n
    new = sorted(b1 | (b2 << shift) for b1 in m1.bases for b2 in m2.bases)
    return Matroid(n, m1.r + m2.r, tuple(new))


# ---------------------------------------------------------------------------
# connectivity and uniformity
# ---------------------------------------------------------------------------

def components(m: Matroid) -> list[int]:
    """Connected components as masks, ordered by smallest element."""
    if m.n == 0:
        raise EmptyGroundSet("connectivity of the empty matroid is undefined")
    return list(m._components)


def is_connected(m: Matroid) -> bool:
    return len(components(m)) == 1


def is_uniform(m: Matroid) -> bool:
    return len(m.bases) == comb(m.n, m.r)
