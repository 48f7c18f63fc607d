"""n-tightness of two-stage complexes.

Removing the open cell ``e_i`` induces ``Z^m/L -> Z^{m-1}/L'`` (drop the
i-th coordinate), which is always onto; its kernel is generated by the class
of the unit vector ``e_i``. So the restriction is an isomorphism exactly when
``e_i`` lies in the lattice L spanned by the sphere relations, and K is
n-tight when that happens for no cell.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional

from .complex import ComplexPresentation
from .lattice import MembershipWitness, QuotientElement, lattice_member


class Verdict(str, enum.Enum):
    MULTIPLE_POINTS_DENSE = "MultiplePointsDense"
    INCONCLUSIVE = "Inconclusive"


@dataclass(frozen=True)
class CellVerdict:
    cell: int
    injective: bool
    witness: Optional[MembershipWitness] = None


@dataclass(frozen=True)
class TightnessReport:
    per_cell: tuple[CellVerdict, ...]

    @property
    def tight(self) -> bool:
        return not any(c.injective for c in self.per_cell)


def cell_removal_injective(K: ComplexPresentation, i: int) -> tuple[bool, Optional[MembershipWitness]]:
    """Is ``H^n(K) -> H^n(K minus open e_i)`` injective? Returns the witness beta if so."""
    witness = lattice_member(K.attach, K.unit(i))
    return witness is not None, witness


def is_tight(K: ComplexPresentation) -> TightnessReport:
    cells = []
    for i in range(1, K.m + 1):
        ok, beta = cell_removal_injective(K, i)
        cells.append(CellVerdict(i, ok, beta))
    return TightnessReport(tuple(cells))


def density_verdict(K: ComplexPresentation, top_map_class: QuotientElement) -> Verdict:
    """Multiple points are dense for a map whose top cohomology pullback is null on a tight K.

    The converse direction is not decided here, so every other case is
    reported as inconclusive.
    """
    if top_map_class.is_zero and is_tight(K).tight:
        return Verdict.MULTIPLE_POINTS_DENSE
    return Verdict.INCONCLUSIVE
