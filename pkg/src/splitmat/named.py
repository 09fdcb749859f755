"""Named matroids: uniform matroids, M(W2) and the excluded minors S0-S4."""

from __future__ import annotations

import re
from itertools import combinations

from .core import Matroid, direct_sum, dual, mask_of, uniform
from .errors import UnknownName

EXCLUDED_MINOR_NAMES = ("S0", "S1", "S2", "S3", "S4")


def _from_dependent_triples(n: int, dependent) -> Matroid:
    bad = {mask_of(t) for t in dependent}
    bases = [mask_of(c) for c in combinations(range(n), 3) if mask_of(c) not in bad]
    return Matroid(n, 3, tuple(sorted(bases)))


def _triples_in(items):
    return list(combinations(items, 3))


def _triples_with_pair(pair, n):
    return [tuple(sorted(pair + (e,))) for e in range(n) if e not in pair]


def wheel2() -> Matroid:
    """M(W2): a triangle with one edge doubled; {2, 3} is the parallel pair."""
    bases = [mask_of(c) for c in combinations(range(4), 2) if c != (2, 3)]
    return Matroid(4, 2, tuple(sorted(bases)))


def s0() -> Matroid:
    return direct_sum(wheel2(), wheel2())


def s1() -> Matroid:
    """Rank 3 on six elements with parallel pairs {0,1} and {2,3}."""
    dep = _triples_with_pair((0, 1), 6) + _triples_with_pair((2, 3), 6)
    return _from_dependent_triples(6, dep)


def s2() -> Matroid:
    return dual(s1())


def s3() -> Matroid:
    """Parallel pair {2,3} on the line {0,1,2,3}, plus the line {0,4,5}."""
    dep = _triples_in((0, 1, 2, 3)) + [(0, 4, 5)] + _triples_with_pair((2, 3), 6)
    return _from_dependent_triples(6, dep)


def s4() -> Matroid:
    """Parallel pair {2,3} on the line {0,1,2,3}; 4 and 5 in general position."""
    dep = _triples_in((0, 1, 2, 3)) + _triples_with_pair((2, 3), 6)
    return _from_dependent_triples(6, dep)


_BUILDERS = {"MW2": wheel2, "S0": s0, "S1": s1, "S2": s2, "S3": s3, "S4": s4}
_UNIFORM = re.compile(r"^U(?:_(\d+)_(\d+)|\((\d+),(\d+)\))$")


def catalog(name: str) -> Matroid:
    """Look up a matroid by name.

    Accepted names (case-insensitive): ``MW2``, ``S0`` to ``S4``, and
    uniform matroids as ``U_r_n`` or ``U(r,n)``.
    """
    key = name.strip().upper().replace(" ", "")
    if key in _BUILDERS:
        return _BUILDERS[key]()
    found = _UNIFORM.match(key)
    if found:
        nums = [int(g) for g in found.groups() if g is not None]
        r, n = nums
        if r > n:
            raise UnknownName(f"U_{r}_{n}: rank exceeds ground-set size")
        return uniform(r, n)
    raise UnknownName(f"unknown matroid name {name!r}")


def excluded_minors() -> dict[str, Matroid]:
    return {name: catalog(name) for name in EXCLUDED_MINOR_NAMES}
