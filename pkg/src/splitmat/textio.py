"""Reading and writing the plain-text matroid format.

A matroid block looks like::

    MATROID n=4 r=2
    0,1
    0,2
    ...

one basis per line, elements ascending.  Instead of basis lines a block may
carry a single ``BASES <string>`` line with one character per ``r``-subset in
revlex (colex) order, ``*`` for a basis and ``0`` otherwise.  A rank-0 block
has no basis lines; its only basis is the empty set.

Files holding many matroids separate blocks by blank lines.  The catalog
style used by published enumerations (a header line ``n r`` followed by one
revlex string per line) is read as well.
"""

from __future__ import annotations

import re
from itertools import combinations
from typing import Iterator

from .core import Matroid, format_set, mask_of, validate
from .errors import ExchangeAxiomViolation, MatroidError, ParseError

_HEADER = re.compile(r"^MATROID\s+n=(\d+)\s+r=(\d+)\s*$")
_CATALOG_HEADER = re.compile(r"^(\d+)\s+(\d+)$")


def revlex_subsets(n: int, r: int) -> list[int]:
    """All ``r``-subsets of ``range(n)`` as masks, in revlex order.

    Revlex compares subsets by their largest element first, so for
    ``n=4, r=2`` the order is 01, 02, 12, 03, 13, 23.
    """
    subsets = list(combinations(range(n), r))
    subsets.sort(key=lambda c: tuple(reversed(c)))
    return [mask_of(c) for c in subsets]


def to_revlex(m: Matroid) -> str:
    return "".join("*" if s in m.basis_set else "0" for s in revlex_subsets(m.n, m.r))


def from_revlex(n: int, r: int, text: str, line=None) -> list[int]:
    subsets = revlex_subsets(n, r)
    text = text.strip()
    if len(text) != len(subsets):
        raise ParseError(
            f"revlex string has {len(text)} characters, expected {len(subsets)}", line
        )
    bad = set(text) - {"*", "0"}
    if bad:
        raise ParseError(f"unexpected characters {''.join(sorted(bad))!r} in revlex string", line)
    return [s for s, ch in zip(subsets, text) if ch == "*"]


def dumps(m: Matroid, compact: bool = False) -> str:
    lines = [f"MATROID n={m.n} r={m.r}"]
    if compact:
        lines.append(f"BASES {to_revlex(m)}")
    elif m.r > 0:
        lines += [format_set(b) for b in m.bases]
    return "\n".join(lines) + "\n"


def dumps_many(ms, compact: bool = False) -> str:
    return "\n".join(dumps(m, compact) for m in ms)


def _parse_basis(line: str, n: int, lineno: int) -> int:
    try:
        items = [int(x) for x in line.split(",")]
    except ValueError:
        raise ParseError(f"cannot read basis {line!r}", lineno) from None
    for e in items:
        if not 0 <= e < n:
            raise ParseError(f"element {e} outside 0..{n - 1}", lineno)
    if len(set(items)) != len(items):
        raise ParseError(f"repeated element in basis {line!r}", lineno)
    return mask_of(items)


def iter_blocks(text: str) -> Iterator[tuple[int, int, int, list[int]]]:
    """Yield ``(first_line, n, r, bases)`` for every matroid in ``text``.

    Bases are raw masks; nothing is validated beyond syntax.
    """
    lines = text.splitlines()
    first = next((i for i, ln in enumerate(lines) if ln.strip()), None)
    if first is None:
        return
    cat = _CATALOG_HEADER.match(lines[first].strip())
    if cat:
        n, r = int(cat.group(1)), int(cat.group(2))
        for i in range(first + 1, len(lines)):
            s = lines[i].strip()
            if s:
                yield i + 1, n, r, from_revlex(n, r, s, i + 1)
        return

    current = None
    for i, raw in enumerate(lines):
        lineno = i + 1
        s = raw.strip()
        if not s or s.startswith("#"):
            continue
        head = _HEADER.match(s)
        if head:
            if current is not None:
                yield current
            n, r = int(head.group(1)), int(head.group(2))
            current = (lineno, n, r, [])
            continue
        if current is None:
            raise ParseError("expected a 'MATROID n=<n> r=<r>' header", lineno)
        _, n, r, bases = current
        if s.startswith("BASES"):
            bases.extend(from_revlex(n, r, s[len("BASES"):], lineno))
        else:
            bases.append(_parse_basis(s, n, lineno))
    if current is not None:
        yield current


def _finish(n, r, bases):
    if r == 0 and not bases:
        bases = [0]
    return validate(n, r, bases)


def loads(text: str) -> Matroid:
    """Parse exactly one matroid."""
    blocks = list(iter_blocks(text))
    if len(blocks) != 1:
        raise ParseError(f"expected one matroid, found {len(blocks)}")
    lineno, n, r, bases = blocks[0]
    try:
        return _finish(n, r, bases)
    except ExchangeAxiomViolation:
        raise
    except MatroidError as exc:
        raise ParseError(str(exc), lineno) from None


def loads_many(text: str) -> list[Matroid]:
    out = []
    for index, (lineno, n, r, bases) in enumerate(iter_blocks(text)):
        try:
            out.append(_finish(n, r, bases))
        except ExchangeAxiomViolation as exc:
            exc.block = index
            raise
        except MatroidError as exc:
            raise ParseError(str(exc), lineno) from None
    return out


def load(path) -> Matroid:
    with open(path) as fh:
        return loads(fh.read())


def save(m: Matroid, path, compact: bool = False):
    with open(path, "w") as fh:
        fh.write(dumps(m, compact))
