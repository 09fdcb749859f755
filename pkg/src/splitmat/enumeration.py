"""Exhaustive catalogs of small matroids up to isomorphism.

Every matroid on ``n + 1`` elements of rank ``r <= n`` has a non-coloop
element, and deleting it leaves a rank-``r`` matroid on ``n`` elements.  So
the rank-``r`` shard on ``n + 1`` elements is obtained by taking every
single-element extension of every member of the rank-``r`` shard on ``n``
elements and discarding isomorphic copies.  The only rank-``(n + 1)``
matroid is the free one.

Single-element extensions are generated from linear subclasses of
hyperplanes: a set ``L`` of hyperplanes such that whenever two members of
``L`` meet in a flat of rank ``r - 2``, every hyperplane through that flat is
in ``L``.  The new element lies on exactly the hyperplanes of ``L``, so a set
``I + e`` (with ``I`` independent of size ``r - 1``) is a new basis iff the
closure of ``I`` is not in ``L``.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations, permutations
from pathlib import Path
from typing import Iterator, Optional

from .canonical import canonical_form
from .core import (
    MAX_N,
    Matroid,
    find_exchange_violation,
    flats,
    mask_of,
    relabel,
    uniform,
)
from .errors import ExchangeAxiomViolation, GroundSetTooLarge, MatroidError, ParseError
from .textio import dumps_many, loads_many

FORMAT_VERSION = 1
DEFAULT_CAP = 8
HARD_CAP = 9


@dataclass
class CatalogShard:
    """Pairwise non-isomorphic matroids with common size ``n`` and rank ``r``.

    Members are canonically labelled and kept in canonical-key order.
    ``duplicates`` and ``rejects`` are only filled in by :func:`ingest`.
    """

    n: Optional[int]
    r: Optional[int]
    members: list = field(default_factory=list)
    duplicates: int = 0
    rejects: int = 0

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)


def _canonical_pair(m: Matroid):
    cf = canonical_form(m)
    return cf.key, relabel(m, cf.labeling)


def _dedup(matroids) -> dict[bytes, Matroid]:
    seen: dict[bytes, Matroid] = {}
    for m in matroids:
        key, canon = _canonical_pair(m)
        seen.setdefault(key, canon)
    return seen


# ---------------------------------------------------------------------------
# single-element extensions
# ---------------------------------------------------------------------------

def linear_subclasses(m: Matroid) -> Iterator[int]:
    """Yield every linear subclass of hyperplanes as a bitmask over hyperplanes.

    Hyperplane ``i`` is the ``i``-th entry of ``hyperplanes(m)``.
    """
    if m.r == 0:
        yield 0
        return
    rk = m.rank_table
    hyper = [f for f in flats(m) if rk[f] == m.r - 1]
    colines = [f for f in flats(m) if rk[f] == m.r - 2]
    touching = [[c for c, g in enumerate(colines) if g & h == g] for h in hyper]
    n_in = [0] * len(colines)
    n_out = [0] * len(colines)
    total = len(hyper)

    def walk(i, chosen):
        if i == total:
            yield chosen
            return
        cs = touching[i]
        # hyperplane i in L
        if all(not (n_in[c] >= 1 and n_out[c] >= 1) for c in cs):
            for c in cs:
                n_in[c] += 1
            yield from walk(i + 1, chosen | (1 << i))
            for c in cs:
                n_in[c] -= 1
        # hyperplane i not in L
        if all(n_in[c] < 2 for c in cs):
            for c in cs:
                n_out[c] += 1
            yield from walk(i + 1, chosen)
            for c in cs:
                n_out[c] -= 1

    yield from walk(0, 0)


def hyperplanes(m: Matroid) -> list[int]:
    rk = m.rank_table
    return [f for f in flats(m) if rk[f] == m.r - 1]


def single_element_extensions(m: Matroid) -> Iterator[Matroid]:
    """Every rank-preserving extension of ``m`` by a new element ``m.n``.

    Includes adding a loop (``L`` = all hyperplanes) and the free
    extension (``L`` empty).  Results are labelled, not deduplicated.
    """
    if m.n + 1 > MAX_N:
        raise GroundSetTooLarge(f"cannot extend beyond {MAX_N} elements")
    new = 1 << m.n
    if m.r == 0:
        yield Matroid(m.n + 1, 0, (0,))
        return
    rk = m.rank_table
    hyper = hyperplanes(m)
    index = {h: i for i, h in enumerate(hyper)}
    spanning: list[list[int]] = [[] for _ in hyper]
    for c in combinations(range(m.n), m.r - 1):
        s = mask_of(c)
        if rk[s] == m.r - 1:
            closure = s
            for e in range(m.n):
                if not s >> e & 1 and rk[s | (1 << e)] == rk[s]:
                    closure |= 1 << e
            spanning[index[closure]].append(s)
    for chosen in linear_subclasses(m):
        extra = [
            s | new
            for i, group in enumerate(spanning)
            if not chosen >> i & 1
            for s in group
        ]
        yield Matroid(m.n + 1, m.r, tuple(sorted(m.bases + tuple(extra))))


def _extensions_of(m: Matroid) -> list[tuple[bytes, Matroid]]:
    return list(_dedup(single_element_extensions(m)).items())


def _jobs(jobs: Optional[int]) -> int:
    return max(1, jobs if jobs else (os.cpu_count() or 1))


def extend_by_one(shard: CatalogShard, jobs: Optional[int] = 1, cap: int = DEFAULT_CAP) -> CatalogShard:
    """The shard of rank-``r`` matroids on ``n + 1`` elements.

    ``shard`` must be the complete rank-``r`` shard on ``n`` elements for the
    result to be complete.  Output does not depend on ``jobs``.
    """
    if shard.n + 1 > min(cap, HARD_CAP):
        raise GroundSetTooLarge(f"enumeration capped at n={min(cap, HARD_CAP)}")
    workers = _jobs(jobs)
    if workers == 1:
        parts = map(_extensions_of, shard.members)
    else:
        with ProcessPoolExecutor(workers) as pool:
            parts = list(pool.map(_extensions_of, shard.members, chunksize=4))
    merged: dict[bytes, Matroid] = {}
    for part in parts:
        for key, m in part:
            merged.setdefault(key, m)
    return CatalogShard(shard.n + 1, shard.r, [merged[k] for k in sorted(merged)])


def _free(n: int) -> CatalogShard:
    m = uniform(n, n)
    return CatalogShard(n, n, [m])


# ---------------------------------------------------------------------------
# full catalogs
# ---------------------------------------------------------------------------

_MEMO: dict[int, list[CatalogShard]] = {}


def _cache_file(cache_dir, n: int) -> Path:
    return Path(cache_dir) / f"catalog-v{FORMAT_VERSION}-n{n}.txt"


def catalog_shards(
    n: int,
    jobs: Optional[int] = 1,
    cache_dir=None,
    cap: int = DEFAULT_CAP,
    memo: bool = True,
) -> list[CatalogShard]:
    """Shards of all matroids on ``n`` elements, one per rank ``0..n``.

    Results are memoised in-process; ``memo=False`` rebuilds from scratch.
    """
    if n > min(cap, HARD_CAP):
        raise GroundSetTooLarge(f"enumeration capped at n={min(cap, HARD_CAP)}")
    if memo and n in _MEMO:
        return _MEMO[n]
    shards = None
    if cache_dir is not None and _cache_file(cache_dir, n).exists():
        shards = _read_cached(_cache_file(cache_dir, n), n)
    if shards is None:
        if n == 0:
            shards = [CatalogShard(0, 0, [Matroid(0, 0, (0,))])]
        else:
            below = catalog_shards(n - 1, jobs, cache_dir, cap, memo)
            shards = [extend_by_one(s, jobs, cap) for s in below] + [_free(n)]
        if cache_dir is not None:
            Path(cache_dir).mkdir(parents=True, exist_ok=True)
            members = [m for s in shards for m in s.members]
            _cache_file(cache_dir, n).write_text(dumps_many(members))
    if memo:
        _MEMO[n] = shards
    return shards


def _read_cached(path: Path, n: int) -> Optional[list[CatalogShard]]:
    try:
        members = loads_many(path.read_text())
    except MatroidError:
        return None
    shards = [CatalogShard(n, r, []) for r in range(n + 1)]
    for m in members:
        if m.n != n:
            return None
        shards[m.r].members.append(m)
    return shards


def catalog_members(n: int, jobs: Optional[int] = 1, cache_dir=None, cap: int = DEFAULT_CAP) -> list[Matroid]:
    return [m for s in catalog_shards(n, jobs, cache_dir, cap) for m in s.members]


def catalog_upto(max_n: int, jobs: Optional[int] = 1, cache_dir=None, cap: int = DEFAULT_CAP) -> Iterator[Matroid]:
    """Every matroid with ``1 <= n <= max_n``, one per isomorphism class."""
    for n in range(1, max_n + 1):
        yield from catalog_members(n, jobs, cache_dir, cap)


# ---------------------------------------------------------------------------
# brute-force oracle (n <= 5)
# ---------------------------------------------------------------------------

def _brute_key(n: int, r: int, family) -> tuple:
    best = None
    for perm in permutations(range(n)):
        image = []
        for b in family:
            nb = 0
            for e in range(n):
                if b >> e & 1:
                    nb |= 1 << perm[e]
            image.append(nb)
        cand = tuple(sorted(image))
        if best is None or cand < best:
            best = cand
    return (n, r, best)


def brute_force_catalog(n: int) -> list[tuple[int, int, tuple[int, ...]]]:
    """Isomorphism classes on ``n`` elements by exhaustive family search.

    Tries every non-empty family of equal-size subsets, keeps the ones
    satisfying basis exchange, and deduplicates by trying every permutation.
    Independent of the extension machinery; only feasible for ``n <= 5``.
    """
    if n > 5:
        raise GroundSetTooLarge("brute-force enumeration is limited to n <= 5")
    keys = set()
    for r in range(n + 1):
        subsets = [mask_of(c) for c in combinations(range(n), r)]
        for pick in range(1, 1 << len(subsets)):
            family = [s for i, s in enumerate(subsets) if pick >> i & 1]
            if find_exchange_violation(family) is None:
                keys.add(_brute_key(n, r, family))
    return sorted(keys)


# ---------------------------------------------------------------------------
# ingesting external catalog files
# ---------------------------------------------------------------------------

def ingest(path, strict: bool = True) -> CatalogShard:
    """Read a matroid file into a canonical, deduplicated shard.

    With ``strict`` a malformed or non-matroid block raises; otherwise such
    blocks are skipped and counted in ``rejects``.  All members must share
    one ``(n, r)``.
    """
    from .textio import _finish, iter_blocks

    text = Path(path).read_text()
    matroids = []
    rejects = 0
    for index, (lineno, n, r, bases) in enumerate(iter_blocks(text)):
        try:
            matroids.append(_finish(n, r, bases))
        except ExchangeAxiomViolation as exc:
            if strict:
                exc.block = index
                raise ExchangeAxiomViolation(
                    f"block {index}: {exc}", exc.pair, exc.element, index
                ) from None
            rejects += 1
        except MatroidError as exc:
            if strict:
                raise ParseError(str(exc), lineno) from None
            rejects += 1
    sizes = {(m.n, m.r) for m in matroids}
    if len(sizes) > 1:
        raise ParseError(f"file mixes sizes/ranks {sorted(sizes)}")
    unique = _dedup(matroids)
    n, r = sizes.pop() if sizes else (None, None)
    return CatalogShard(
        n, r, [unique[k] for k in sorted(unique)],
        duplicates=len(matroids) - len(unique), rejects=rejects,
    )


def write_shard(shard: CatalogShard, path=None) -> str:
    text = dumps_many(shard.members)
    if path is not None:
        Path(path).write_text(text)
    return text

