"""Deciding whether a matroid is split.

A connected matroid is split exactly when it has no *certificate*: a proper
cyclic flat ``Z`` such that ``M|Z`` and ``M/Z`` are both connected and at
least one of them is not uniform.  A disconnected matroid is split when every
component is split and at most one component is non-uniform.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass
from typing import Optional

from .core import (
    Matroid,
    components,
    contract,
    dual,
    elements,
    flats,
    format_set,
    is_connected,
    is_uniform,
    proper_cyclic_flats,
    restrict,
)
from .errors import EmptyGroundSet, NotConnected


@dataclass(frozen=True)
class Certificate:
    flat: int
    restriction_connected: bool
    contraction_connected: bool
    restriction_uniform: bool
    contraction_uniform: bool

    def to_text(self) -> str:
        b = lambda v: "yes" if v else "no"  # noqa: E731
        return (
            f"CERT {format_set(self.flat)} restr_conn={b(self.restriction_connected)} "
            f"contr_conn={b(self.contraction_connected)} "
            f"restr_unif={b(self.restriction_uniform)} contr_unif={b(self.contraction_uniform)}"
        )


@dataclass(frozen=True)
class ComponentVerdict:
    block: int
    split: bool
    uniform: bool


@dataclass(frozen=True)
class ComponentAnalysis:
    components: tuple[ComponentVerdict, ...]

    @property
    def nonuniform(self) -> int:
        return sum(not c.uniform for c in self.components)


@dataclass(frozen=True)
class SplitReport:
    verdict: bool
    certificates: tuple[Certificate, ...] = ()
    component_analysis: Optional[ComponentAnalysis] = None

    def to_text(self) -> str:
        lines = ["SPLIT yes" if self.verdict else "SPLIT no"]
        lines += [c.to_text() for c in self.certificates]
        ca = self.component_analysis
        if ca is not None:
            lines.append(f"COMPONENTS count={len(ca.components)} nonuniform={ca.nonuniform}")
            for c in ca.components:
                lines.append(
                    f"COMPONENT {format_set(c.block)} split={'yes' if c.split else 'no'} "
                    f"uniform={'yes' if c.uniform else 'no'}"
                )
        return "\n".join(lines)

    def to_dict(self) -> dict:
        out = {
            "split": self.verdict,
            "certificates": [
                dict(asdict(c), flat=list(elements(c.flat))) for c in self.certificates
            ],
        }
        if self.component_analysis is not None:
            ca = self.component_analysis
            out["components"] = {
                "count": len(ca.components),
                "nonuniform": ca.nonuniform,
                "blocks": [
                    {"block": list(elements(c.block)), "split": c.split, "uniform": c.uniform}
                    for c in ca.components
                ],
            }
        return out


def _require_connected(m: Matroid):
    if m.n == 0 or not is_connected(m):
        raise NotConnected("operation is defined for connected matroids only")


def flacets(m: Matroid) -> list[int]:
    """Proper flats ``F`` with ``M|F`` and ``M/F`` both connected."""
    _require_connected(m)
    rk = m.rank_table
    out = []
    for f in flats(m):
        if 0 < rk[f] < m.r and is_connected(restrict(m, f)) and is_connected(contract(m, f)):
            out.append(f)
    return out


def certificates(m: Matroid) -> list[Certificate]:
    """Certificates for non-splitting, in cyclic-flat scan order."""
    _require_connected(m)
    return _certificates(m)


def _certificates(m: Matroid) -> list[Certificate]:
    out = []
    for z in proper_cyclic_flats(m):
        below = restrict(m, z)
        if not is_connected(below):
            continue
        above = contract(m, z)
        if not is_connected(above):
            continue
        u_below, u_above = is_uniform(below), is_uniform(above)
        if not (u_below and u_above):
            out.append(Certificate(z, True, True, u_below, u_above))
    return out


def is_split(m: Matroid) -> SplitReport:
    if m.n == 0:
        raise EmptyGroundSet("split-ness of the empty matroid is not defined")
    blocks = components(m)
    if len(blocks) == 1:
        certs = _certificates(m)
        return SplitReport(not certs, tuple(certs))
    verdicts = []
    for block in blocks:
        part = restrict(m, block)
        verdicts.append(
            ComponentVerdict(block, not _certificates(part), is_uniform(part))
        )
    analysis = ComponentAnalysis(tuple(verdicts))
    ok = all(v.split for v in verdicts) and analysis.nonuniform <= 1
    return SplitReport(ok, (), analysis)


def is_split_via_corollary(m: Matroid) -> bool:
    """Split test that only looks at restrictions, in ``M`` and in its dual."""
    _require_connected(m)
    for side in (m, dual(m)):
        for z in proper_cyclic_flats(side):
            below = restrict(side, z)
            if is_connected(below) and not is_uniform(below):
                return False
    return True
