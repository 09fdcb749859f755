"""Exhaustive check that S0-S4 are exactly the excluded minors for split matroids.

For every catalogued matroid two independent verdicts are compared: the
certificate-based split test, and "has no minor isomorphic to any of
S0, ..., S4".  Any disagreement is a mismatch.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Optional

from .core import Matroid, format_set
from .enumeration import DEFAULT_CAP, HARD_CAP, catalog_members
from .errors import GroundSetTooLarge
from .minors import has_minor
from .named import EXCLUDED_MINOR_NAMES, excluded_minors
from .split import is_split
from .textio import to_revlex


@dataclass(frozen=True)
class Mismatch:
    matroid: Matroid
    split: bool
    minor_free: bool
    obstruction: Optional[str]

    def to_text(self) -> str:
        m = self.matroid
        return (
            f"MISMATCH n={m.n} r={m.r} bases={to_revlex(m)} split={'yes' if self.split else 'no'} "
            f"minor_free={'yes' if self.minor_free else 'no'} obstruction={self.obstruction or '-'}"
        )


@dataclass
class TheoremReport:
    max_n: int
    rows: list = field(default_factory=list)  # (n, r, count, split, nonsplit)
    mismatches: list = field(default_factory=list)
    obstructions: dict = field(default_factory=dict)  # name -> matroids containing it

    @property
    def total(self) -> int:
        return sum(row[2] for row in self.rows)

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def to_text(self) -> str:
        lines = [f"N={n} R={r} COUNT={c} SPLIT={s} NONSPLIT={ns}" for n, r, c, s, ns in self.rows]
        lines += [mm.to_text() for mm in self.mismatches]
        lines.append(f"TOTAL={self.total} MISMATCHES={len(self.mismatches)}")
        return "\n".join(lines)

    def to_dict(self) -> dict:
        return {
            "max_n": self.max_n,
            "rows": [
                {"n": n, "r": r, "count": c, "split": s, "nonsplit": ns}
                for n, r, c, s, ns in self.rows
            ],
            "mismatches": [
                {
                    "n": mm.matroid.n,
                    "r": mm.matroid.r,
                    "bases": [format_set(b) for b in mm.matroid.bases],
                    "split": mm.split,
                    "minor_free": mm.minor_free,
                    "obstruction": mm.obstruction,
                }
                for mm in self.mismatches
            ],
            "total": self.total,
            "mismatch_count": len(self.mismatches),
        }


_TARGETS = None


def _judge(m: Matroid):
    global _TARGETS
    if _TARGETS is None:
        _TARGETS = excluded_minors()
    split = is_split(m).verdict
    found = None
    for name in EXCLUDED_MINOR_NAMES:
        if has_minor(m, _TARGETS[name]) is not None:
            found = name
            break
    return split, found


def verify_theorem(
    max_n: int, jobs: Optional[int] = 1, cache_dir=None, long_running: bool = False
) -> TheoremReport:
    """Compare both verdicts on every matroid with ``1 <= n <= max_n``.

    The result is identical for every value of ``jobs``.
    """
    cap = HARD_CAP if long_running else DEFAULT_CAP
    if not 1 <= max_n <= cap:
        raise GroundSetTooLarge(f"max_n must lie in 1..{cap}")
    workers = max(1, jobs if jobs else (os.cpu_count() or 1))
    report = TheoremReport(max_n)
    for n in range(1, max_n + 1):
        members = catalog_members(n, jobs, cache_dir, cap)
        if workers == 1:
            verdicts = list(map(_judge, members))
        else:
            with ProcessPoolExecutor(workers) as pool:
                verdicts = list(pool.map(_judge, members, chunksize=16))
        counts: dict[int, list[int]] = {}
        for m, (split, found) in zip(members, verdicts):
            row = counts.setdefault(m.r, [0, 0, 0])
            row[0] += 1
            row[1 if split else 2] += 1
            if found is not None:
                report.obstructions.setdefault(found, []).append(m)
            if split != (found is None):
                report.mismatches.append(Mismatch(m, split, found is None, found))
        for r in sorted(counts):
            report.rows.append((n, r, *counts[r]))
    return report
