"""Region-by-region description of the essentially deficient set E_f.

A target point y belongs to E_f when its fiber is finite and
``(#essential preimages) * k_f < A(f)``. For maps built from power models
(a cell of degree d covers its hemisphere like ``z -> z^d``) fibers are
constant on each of a handful of regions, so E_f is a finite union of them.

Model semantics (declared, exact for n = 2 and adopted verbatim for n >= 3):

* a generic point of a target cell has ``|d_i|`` preimages in each cell i
  mapped there, each with local class ``sign(d_i) * [e_i*]``;
* the pole (the branch value) has one preimage per such cell with
  ``d_i != 0``, carrying class ``d_i * [e_i*]``;
* a generic equator point has ``sum |W_j|`` preimages, all on the
  (n-1)-skeleton, whose local classes are not computable from cellular
  data; only the upper bound ``#essential <= #preimages`` is used;
* a cell of degree 0 is folded into the equator (or onto the base point of
  a one-cell target), so that fiber is not discrete.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional

from .degree import CellularSphereMap, TargetModel, degree_report, top_quotient
from .errors import UnsupportedTarget
from .lattice import QuotientElement


class RegionKind(str, enum.Enum):
    GENERIC_INTERIOR = "GenericInterior"
    POLE = "Pole"
    EQUATOR = "Equator"
    BASEPOINT = "Basepoint"


class Membership(str, enum.Enum):
    YES = "Yes"
    NO = "No"
    YES_BY_BOUND = "YesByBound"
    UNDETERMINED = "Undetermined"


@dataclass(frozen=True)
class Region:
    kind: RegionKind
    target_cell: Optional[str] = None

    def dimension(self, n: int) -> int:
        return {
            RegionKind.GENERIC_INTERIOR: n,
            RegionKind.POLE: 0,
            RegionKind.EQUATOR: n - 1,
            RegionKind.BASEPOINT: 0,
        }[self.kind]

    def __str__(self) -> str:
        return f"{self.kind.value}({self.target_cell})" if self.target_cell else self.kind.value


@dataclass(frozen=True)
class RegionReport:
    """Fiber data over one region; ``preimage_count is None`` marks a non-discrete fiber."""

    region: Region
    preimage_count: Optional[int]
    essential_exact: Optional[int]
    essential_upper: Optional[int]
    local_classes: tuple[QuotientElement, ...]
    in_ef: Membership


@dataclass(frozen=True)
class DeficientSetDescription:
    reports: tuple[RegionReport, ...]
    dimension: int  # -1 for the empty set

    @property
    def regions_in_ef(self) -> tuple[RegionReport, ...]:
        return tuple(r for r in self.reports if r.in_ef in (Membership.YES, Membership.YES_BY_BOUND))


def regions(f: CellularSphereMap) -> list[Region]:
    cells = f.target.model.cells
    out = [Region(RegionKind.GENERIC_INTERIOR, c) for c in cells]
    out += [Region(RegionKind.POLE, c) for c in cells]
    if f.target.model is TargetModel.TWO_HEMISPHERES:
        out.append(Region(RegionKind.EQUATOR))
    else:
        out.append(Region(RegionKind.BASEPOINT))
    return out


def _membership(exact, upper, kf, a) -> Membership:
    if exact is not None:
        return Membership.YES if exact * kf < a else Membership.NO
    if upper * kf < a:
        return Membership.YES_BY_BOUND
    return Membership.NO if a <= 0 else Membership.UNDETERMINED


def preimage_profile(f: CellularSphereMap, region: Region) -> RegionReport:
    if region not in regions(f):
        raise UnsupportedTarget(f"region {region} does not belong to the {f.target.model.value} target")
    report = degree_report(f)
    kf, a = report.kf, report.absolute_degree
    q = top_quotient(f.source)
    K = f.source
    cell_cls = [q.image(K.unit(i)) for i in range(1, K.m + 1)]
    over = [i for i, c in enumerate(f.cell_degrees) if c.target_cell == region.target_cell]

    if region.kind is RegionKind.GENERIC_INTERIOR:
        classes = []
        for i in over:
            d = f.cell_degrees[i].degree
            sheet = cell_cls[i] if d > 0 else -cell_cls[i]
            classes += [sheet] * abs(d)
        exact = sum(abs(f.cell_degrees[i].degree) for i in over if not cell_cls[i].is_zero)
        return RegionReport(region, len(classes), exact, exact, tuple(classes), _membership(exact, exact, kf, a))

    if region.kind is RegionKind.POLE:
        classes = tuple(f.cell_degrees[i].degree * cell_cls[i] for i in over if f.cell_degrees[i].degree)
        exact = sum(1 for c in classes if not c.is_zero)
        return RegionReport(region, len(classes), exact, exact, classes, _membership(exact, exact, kf, a))

    folded = any(c.degree == 0 for c in f.cell_degrees)
    if region.kind is RegionKind.EQUATOR:
        discrete = not folded
        count = sum(abs(w) for w in f.skeleton_degrees)
    else:
        discrete = not folded and K.k == 0
        count = 1
    if not discrete:
        return RegionReport(region, None, None, None, (), Membership.NO)
    return RegionReport(region, count, None, count, (), _membership(None, count, kf, a))


def deficient_set(f: CellularSphereMap) -> DeficientSetDescription:
    reports = tuple(preimage_profile(f, r) for r in regions(f))
    dims = [
        r.region.dimension(f.source.n)
        for r in reports
        if r.in_ef in (Membership.YES, Membership.YES_BY_BOUND)
    ]
    return DeficientSetDescription(reports, max(dims, default=-1))


def degree_sum_check(f: CellularSphereMap) -> bool:
    """Local classes over a generic point of every target cell add up to the degree class."""
    deg = degree_report(f).deg_class
    for cell in f.target.model.cells:
        rep = preimage_profile(f, Region(RegionKind.GENERIC_INTERIOR, cell))
        total = QuotientElement(0, deg.modulus)
        for c in rep.local_classes:
            total = total + c
        if total != deg:
            return False
    return True
