"""Base-polytope geometry in exact integer arithmetic.

Only affine dimensions are needed: the dimension of ``P(M)``, and of the face
cut out by the hyperplane ``sum_{i in F} x_i = r(F)`` for a flat ``F``.  Both
are ranks of integer difference matrices, computed by fraction-free
(Bareiss) elimination.  No floating point is used anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Matroid, components, elements, flats, format_set, is_connected, is_flat, popcount
from .errors import NotAFlat, NotConnected
from .split import flacets


def integer_rank(rows) -> int:
    """Rank of an integer matrix by fraction-free Gaussian elimination."""
    a = [list(map(int, row)) for row in rows]
    if not a:
        return 0
    m, n = len(a), len(a[0])
    rank = 0
    prev = 1
    for col in range(n):
        pivot = next((i for i in range(rank, m) if a[i][col] != 0), None)
        if pivot is None:
            continue
        a[rank], a[pivot] = a[pivot], a[rank]
        p = a[rank][col]
        for i in range(rank + 1, m):
            f = a[i][col]
            row_i, row_r = a[i], a[rank]
            for j in range(col, n):
                # Bareiss step: the division is exact
                row_i[j] = (p * row_i[j] - f * row_r[j]) // prev
        prev = p
        rank += 1
        if rank == m:
            break
    return rank


def vertex_matrix(m: Matroid, bases=None) -> list[tuple[int, ...]]:
    """Characteristic vectors of the given bases (all bases by default)."""
    bases = m.bases if bases is None else bases
    return [tuple(b >> i & 1 for i in range(m.n)) for b in bases]


def affine_dimension(vertices) -> int:
    """Dimension of the affine hull of the points; ``-1`` for no points."""
    if not vertices:
        return -1
    v0 = vertices[0]
    diffs = [[x - y for x, y in zip(v, v0)] for v in vertices[1:]]
    return integer_rank(diffs)


def polytope_dim(m: Matroid) -> int:
    return affine_dimension(vertex_matrix(m))


def _face_bases(m: Matroid, f: int) -> list[int]:
    k = m.rank_table[f]
    return [b for b in m.bases if popcount(b & f) == k]


def flat_face_dim(m: Matroid, f: int) -> int:
    """Dimension of the face of ``P(M)`` on the hyperplane of flat ``f``."""
    if not is_flat(m, f):
        raise NotAFlat(f"{{{format_set(f)}}} is not a flat")
    return affine_dimension(vertex_matrix(m, _face_bases(m, f)))


def is_facet_flat(m: Matroid, f: int) -> bool:
    if m.n == 0 or not is_connected(m):
        raise NotConnected("facet test is defined for connected matroids only")
    return flat_face_dim(m, f) == polytope_dim(m) - 1


def geometric_flacets(m: Matroid) -> list[int]:
    """Facet-defining flats that are inclusion-minimal for their facet."""
    if m.n == 0 or not is_connected(m):
        raise NotConnected("facet test is defined for connected matroids only")
    target = polytope_dim(m) - 1
    facet_of = {}
    for f in flats(m):
        face = tuple(_face_bases(m, f))
        if affine_dimension(vertex_matrix(m, face)) == target:
            facet_of[f] = face
    out = []
    for f, face in facet_of.items():
        smaller = any(g != f and g & f == g and facet_of[g] == face for g in facet_of)
        if not smaller:
            out.append(f)
    return sorted(out, key=lambda f: (popcount(f), f))


def _fmt_family(family) -> str:
    return ",".join("{" + format_set(f) + "}" for f in family) if family else "none"


@dataclass(frozen=True)
class FlacetReport:
    combinatorial: tuple[int, ...]
    geometric: tuple[int, ...]

    @property
    def difference(self) -> set:
        return set(self.combinatorial) ^ set(self.geometric)

    @property
    def agree(self) -> bool:
        return not self.difference

    def to_text(self) -> str:
        return (
            f"FLACETS combinatorial={_fmt_family(self.combinatorial)} "
            f"geometric={_fmt_family(self.geometric)} agree={'yes' if self.agree else 'no'}"
        )

    def to_dict(self) -> dict:
        return {
            "combinatorial": [list(elements(f)) for f in self.combinatorial],
            "geometric": [list(elements(f)) for f in self.geometric],
            "agree": self.agree,
        }


def crosscheck_flacets(m: Matroid) -> FlacetReport:
    """Compare connected-restriction/contraction flacets with facet geometry."""
    comb = sorted(flacets(m), key=lambda f: (popcount(f), f))
    return FlacetReport(tuple(comb), tuple(geometric_flacets(m)))


def component_count(m: Matroid) -> int:
    return len(components(m))
