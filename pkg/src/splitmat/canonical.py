"""Canonical labelling of matroids for isomorphism testing.

The canonical key of a matroid is ``(n, r)`` followed by the lexicographically
smallest sorted list of basis masks over a set of relabellings.  That set is
chosen by an isomorphism-invariant procedure, so two matroids get equal keys
exactly when they are isomorphic:

1. Colour elements by how many bases contain them, then refine by the
   multiset of (neighbour colour, number of bases containing both) until
   stable.  Colour classes are ordered by their signatures, never by labels.
2. If every labelling respecting the ordered classes is affordable, evaluate
   them all at once with numpy and keep the minimum.
3. Otherwise individualise each element of the first largest class in turn,
   refine again and recurse, keeping the minimum over branches.  A branch
   is skipped when transposing its element with an already explored one is
   an automorphism, since both subtrees then yield the same labellings.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations, product
from math import factorial, prod

import numpy as np

from .core import MAX_N, Matroid, elements, relabel
from .errors import GroundSetTooLarge

# largest number of labellings evaluated in one vectorised batch
LEAF_LIMIT = 50_000


@dataclass(frozen=True)
class CanonicalForm:
    """``key`` identifies the isomorphism class; ``labeling[e]`` is the
    canonical position assigned to element ``e`` of the input."""

    key: bytes
    labeling: tuple[int, ...]

    def __lt__(self, other):
        return self.key < other.key


def _encode(n: int, r: int, masks) -> bytes:
    return bytes([n, r]) + b"".join(int(m).to_bytes(2, "big") for m in masks)


def _basis_matrix(m: Matroid) -> np.ndarray:
    rows = np.array(m.bases, dtype=np.int64)
    return ((rows[:, None] >> np.arange(m.n)) & 1).astype(np.int64)


def _refine(colors: list[int], pair: np.ndarray) -> list[int]:
    n = len(colors)
    pair = pair.tolist()
    classes = len(set(colors))
    while True:
        sigs = []
        for e in range(n):
            row = pair[e]
            nb = sorted((colors[f], row[f]) for f in range(n) if f != e)
            sigs.append((colors[e], row[e], tuple(nb)))
        order = {s: i for i, s in enumerate(sorted(set(sigs)))}
        colors = [order[s] for s in sigs]
        if len(order) == classes:
            return colors
        classes = len(order)


def _cells(colors: list[int]) -> list[list[int]]:
    groups: dict[int, list[int]] = {}
    for e, c in enumerate(colors):
        groups.setdefault(c, []).append(e)
    return [groups[c] for c in sorted(groups)]


@lru_cache(maxsize=256)
def _position_table(sizes: tuple[int, ...]) -> np.ndarray:
    """Every labelling that maps cell ``k`` onto its own block of positions.

    Row ``p``, column ``j`` is the position of the ``j``-th element when the
    cells are concatenated in order.
    """
    blocks = []
    start = 0
    for s in sizes:
        blocks.append(list(permutations(range(start, start + s))))
        start += s
    rows = [sum(choice, ()) for choice in product(*blocks)]
    return np.array(rows, dtype=np.int64)


def _best_leaf(bmat: np.ndarray, cells: list[list[int]]):
    order = [e for cell in cells for e in cell]
    table = _position_table(tuple(len(c) for c in cells))
    weights = np.left_shift(1, table)  # (P, n)
    mapped = bmat[:, order] @ weights.T  # (bases, P)
    mapped.sort(axis=0)
    cand = np.arange(mapped.shape[1])
    for row in mapped:
        vals = row[cand]
        cand = cand[vals == vals.min()]
        if len(cand) == 1:
            break
    best = int(cand[0])
    labeling = [0] * len(order)
    for j, e in enumerate(order):
        labeling[e] = int(table[best, j])
    return tuple(mapped[:, best].tolist()), tuple(labeling)


def _swap_is_automorphism(bases, basis_set, x, y) -> bool:
    bx, by = 1 << x, 1 << y
    for b in bases:
        if bool(b & bx) != bool(b & by) and (b ^ bx ^ by) not in basis_set:
            return False
    return True


def _search(bmat, pair, colors, bases, basis_set):
    colors = _refine(colors, pair)
    cells = _cells(colors)
    if prod(factorial(len(c)) for c in cells) <= LEAF_LIMIT:
        return _best_leaf(bmat, cells)
    target = max(cells, key=len)
    best = None
    explored = []
    for x in target:
        # swapping x with an explored y fixes the colouring, so the subtree
        # under x is an automorphic copy of the one under y
        if any(_swap_is_automorphism(bases, basis_set, x, y) for y in explored):
            continue
        explored.append(x)
        branch = [2 * c + 1 for c in colors]
        branch[x] -= 1
        found = _search(bmat, pair, branch, bases, basis_set)
        if best is None or found[0] < best[0]:
            best = found
    return best


def canonical_form(m: Matroid) -> CanonicalForm:
    if m.n > MAX_N:
        raise GroundSetTooLarge(f"ground set of size {m.n} exceeds the cap of {MAX_N}")
    if m.n == 0:
        return CanonicalForm(_encode(0, m.r, m.bases), ())
    bmat = _basis_matrix(m)
    pair = bmat.T @ bmat
    colors = [0] * m.n
    masks, labeling = _search(bmat, pair, colors, m.bases, m.basis_set)
    return CanonicalForm(_encode(m.n, m.r, masks), labeling)


def canonical_matroid(m: Matroid) -> Matroid:
    """The representative of ``m``'s isomorphism class with canonical labels."""
    return relabel(m, canonical_form(m).labeling)


def is_isomorphic(m: Matroid, other: Matroid) -> bool:
    if (m.n, m.r, len(m.bases)) != (other.n, other.r, len(other.bases)):
        return False
    return canonical_form(m).key == canonical_form(other).key


def isomorphism(m: Matroid, other: Matroid):
    """A bijection ``phi`` (tuple) with ``relabel(m, phi) == other``, or ``None``."""
    if not is_isomorphic(m, other):
        return None
    a = canonical_form(m).labeling
    b = canonical_form(other).labeling
    inv_b = [0] * len(b)
    for e, p in enumerate(b):
        inv_b[p] = e
    return tuple(inv_b[a[e]] for e in range(m.n))


def brute_force_isomorphic(m: Matroid, other: Matroid) -> bool:
    """Try every bijection; only sensible for tiny ground sets."""
    if (m.n, m.r, len(m.bases)) != (other.n, other.r, len(other.bases)):
        return False
    target = other.basis_set
    for perm in permutations(range(m.n)):
        if all(_image(b, perm) in target for b in m.bases):
            return True
    return False


def _image(mask, perm):
    out = 0
    for e in elements(mask):
        out |= 1 << perm[e]
    return out
