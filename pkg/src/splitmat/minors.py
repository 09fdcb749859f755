"""Minor containment with explicit witnesses, and excluded-minor checks."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from .canonical import canonical_form
from .core import (
    Matroid,
    contract,
    delete,
    elements,
    format_set,
    mask_of,
    minor,
    relabel,
)
from .split import is_split


@dataclass(frozen=True)
class MinorWitness:
    """``host / contracted \\ deleted`` relabelled by ``relabel`` equals the target.

    ``relabel[t]`` is the host element playing the role of target element ``t``.
    """

    contracted: int
    deleted: int
    relabel: tuple[int, ...]

    def to_text(self) -> str:
        pairs = ",".join(f"{t}:{h}" for t, h in enumerate(self.relabel))
        return (
            f"WITNESS contracted={format_set(self.contracted)} "
            f"deleted={format_set(self.deleted)} relabel={pairs}"
        )

    def to_dict(self) -> dict:
        return {
            "contracted": list(elements(self.contracted)),
            "deleted": list(elements(self.deleted)),
            "relabel": list(self.relabel),
        }


def apply_witness(host: Matroid, witness: MinorWitness) -> Matroid:
    """Rebuild the target from ``host``; equal (not just isomorphic) to it."""
    small, labels = minor(host, witness.contracted, witness.deleted)
    position = {h: j for j, h in enumerate(labels)}
    # small's element j is host element labels[j]; send it to its target name
    to_target = [0] * small.n
    for t, h in enumerate(witness.relabel):
        to_target[position[h]] = t
    return relabel(small, to_target)


def _degrees(m: Matroid) -> tuple[int, ...]:
    return tuple(sorted(sum(b >> e & 1 for b in m.bases) for e in range(m.n)))


def minors_of_shape(host: Matroid, n: int, r: int):
    """Yield ``(C, D, minor, labels)`` for independent ``C``, coindependent ``D``.

    Pairs are produced in ascending mask order of ``C`` then ``D`` (host
    labels).  Only minors on ``n`` elements of rank ``r`` are produced.
    """
    k = host.r - r
    d = host.n - k - n
    if k < 0 or d < 0 or n < 1:
        return
    rk = host.rank_table
    for c in sorted(mask_of(x) for x in combinations(range(host.n), k)):
        if rk[c] != k:
            continue
        mc = contract(host, c)
        rest = tuple(e for e in range(host.n) if not c >> e & 1)
        dl = sorted(mask_of(x) for x in combinations(range(mc.n), d))
        for dm in dl:
            # coindependent in M/C: deleting keeps the rank
            if mc.rank_table[mc.ground & ~dm] != mc.r:
                continue
            small = delete(mc, dm)
            keep = tuple(rest[j] for j in range(mc.n) if not dm >> j & 1)
            host_d = mask_of(rest[j] for j in elements(dm))
            yield c, host_d, small, keep


def has_minor(host: Matroid, target: Matroid) -> Optional[MinorWitness]:
    """First witness that ``target`` is a minor of ``host``, else ``None``."""
    want = canonical_form(target)
    nb = len(target.bases)
    degs = _degrees(target)
    for c, d, small, keep in minors_of_shape(host, target.n, target.r):
        if len(small.bases) != nb or _degrees(small) != degs:
            continue
        got = canonical_form(small)
        if got.key != want.key:
            continue
        inv = [0] * small.n
        for j, p in enumerate(got.labeling):
            inv[p] = j
        relabel_map = tuple(keep[inv[want.labeling[t]]] for t in range(target.n))
        return MinorWitness(c, d, relabel_map)
    return None


def single_element_minors(m: Matroid):
    """Yield ``(kind, e, minor)`` for every single-element deletion and contraction."""
    for e in range(m.n):
        yield "delete", e, delete(m, 1 << e)
        yield "contract", e, contract(m, 1 << e)


def verify_excluded_minor(m: Matroid) -> bool:
    """Non-split, while every single-element deletion and contraction is split."""
    if m.n == 0 or is_split(m).verdict:
        return False
    return all(is_split(small).verdict for _, _, small in single_element_minors(m))
