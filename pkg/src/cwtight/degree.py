"""Degree invariants of cellular maps from a two-stage complex to S^n.

Targets are cellular models of the n-sphere:

* ``one-cell``: a point with one n-cell ``top``;
* ``two-hemispheres``: the equator S^{n-1} with cells ``north`` and
  ``south`` glued with degrees +1 and -1, so ``north* = south*`` in
  cohomology.

A map assigns each source cell a target cell and a degree, and each wedge
sphere a degree onto the equator. It is accepted only when these numbers
commute with the coboundaries, ``attach @ W == Dmat @ rel``.

Spheres of dimension >= 2 are simply connected, so the minimal covering
through which a map lifts is the identity (one sheet) and the absolute
degree equals ``|deg f|``.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass

from .complex import ComplexPresentation, top_cohomology
from .errors import ChainMapError, InputError, NonCyclicQuotient, NonCyclicTopCohomology
from .lattice import AbelianGroupPresentation, CyclicQuotient, QuotientElement, cyclic_quotient
from .tightness import Verdict


class TargetModel(str, enum.Enum):
    ONE_CELL = "one-cell"
    TWO_HEMISPHERES = "two-hemispheres"

    @property
    def cells(self) -> tuple[str, ...]:
        return ("top",) if self is TargetModel.ONE_CELL else ("north", "south")

    @property
    def relation(self) -> tuple[int, ...]:
        """Degrees of the target n-cells on the equator (empty without one)."""
        return () if self is TargetModel.ONE_CELL else (1, -1)


@dataclass(frozen=True)
class SphereTarget:
    n: int
    model: TargetModel = TargetModel.TWO_HEMISPHERES

    def __post_init__(self):
        object.__setattr__(self, "model", TargetModel(self.model))
        if self.n < 2:
            raise InputError(f"sphere targets need n >= 2, got {self.n}")

    def cell_index(self, name: str) -> int:
        try:
            return self.model.cells.index(name)
        except ValueError:
            raise InputError(
                f"target cell {name!r} is not one of {list(self.model.cells)}"
            ) from None


@dataclass(frozen=True)
class CellDegree:
    target_cell: str
    degree: int


@dataclass(frozen=True)
class CellularSphereMap:
    source: ComplexPresentation
    target: SphereTarget
    cell_degrees: tuple[CellDegree, ...]
    skeleton_degrees: tuple[int, ...]

    def __post_init__(self):
        K, T = self.source, self.target
        object.__setattr__(self, "cell_degrees", tuple(
            c if isinstance(c, CellDegree) else CellDegree(*c) for c in self.cell_degrees))
        object.__setattr__(self, "skeleton_degrees", tuple(int(w) for w in self.skeleton_degrees))
        if T.n != K.n:
            raise InputError(f"target dimension {T.n} differs from source dimension {K.n}")
        if len(self.cell_degrees) != K.m:
            raise InputError(f"expected degrees for {K.m} cells, got {len(self.cell_degrees)}")
        for c in self.cell_degrees:
            T.cell_index(c.target_cell)
        if len(self.skeleton_degrees) != K.k:
            raise InputError(
                f"expected {K.k} skeleton degrees, got {len(self.skeleton_degrees)}"
            )
        if T.model is TargetModel.ONE_CELL and any(self.skeleton_degrees):
            raise ChainMapError("a one-cell target has no equator: skeleton degrees must be 0")
        lhs = K.attach @ self.skeleton_degrees
        rhs = tuple(sum(a * r for a, r in zip(row, T.model.relation)) for row in self.degree_matrix())
        if lhs != rhs:
            raise ChainMapError(
                f"not a cochain map: attach @ skeleton = {list(lhs)} but "
                f"cell degrees @ target relation = {list(rhs)}"
            )

    def degree_matrix(self) -> list[list[int]]:
        """``m x (#target cells)`` matrix with the degree of cell i in its target column."""
        width = len(self.target.model.cells)
        rows = []
        for c in self.cell_degrees:
            row = [0] * width
            row[self.target.cell_index(c.target_cell)] = c.degree
            rows.append(row)
        return rows

    def pullback(self, target_cell: str) -> tuple[int, ...]:
        """Cochain of K pulled back from the dual of ``target_cell``."""
        t = self.target.cell_index(target_cell)
        return tuple(row[t] for row in self.degree_matrix())


_ALLOWED_TOP = (
    AbelianGroupPresentation(1),
    AbelianGroupPresentation(0, (2,)),
    AbelianGroupPresentation(0),
)


def top_quotient(K: ComplexPresentation) -> CyclicQuotient:
    group = top_cohomology(K)
    if group not in _ALLOWED_TOP:
        raise NonCyclicTopCohomology(
            f"H^{K.n}(K) = {group}; degree theory here needs Z, Z/2 or 0"
        )
    try:
        return cyclic_quotient(K.attach)
    except NonCyclicQuotient as exc:  # pragma: no cover - excluded above
        raise NonCyclicTopCohomology(str(exc)) from None


def _magnitude(e: QuotientElement) -> int:
    if e.modulus == 0:
        return abs(e.value)
    return 0 if e.is_zero else 1


def twisted_degree(f: CellularSphereMap, generator_sign: int = 1) -> tuple[QuotientElement, int]:
    """``(deg class, |deg|)``; for ``H^n = Z/2`` the magnitude is 0 or 1."""
    q = top_quotient(f.source)
    cls = q.image(f.pullback(f.target.model.cells[0]), generator_sign)
    return cls, _magnitude(cls)


def k_values(f: CellularSphereMap, generator_sign: int = 1) -> tuple[list[int], int]:
    """Per-cell local indices and their maximum ``k_f`` (cell interiors only).

    The image of the local cohomology at a point inside ``e_i`` is generated
    by the class of ``e_i*``; its index is ``|class|`` in Z, 1 for a nonzero
    class in Z/2, and 0 when the class vanishes.
    """
    q = top_quotient(f.source)
    ks = [_magnitude(q.image(f.source.unit(i), generator_sign)) for i in range(1, f.source.m + 1)]
    return ks, max(ks)


def absolute_degree(f: CellularSphereMap) -> int:
    return twisted_degree(f)[1]


@dataclass(frozen=True)
class DegreeReport:
    deg_class: QuotientElement
    deg_abs: int
    k_per_cell: tuple[int, ...]
    kf: int
    absolute_degree: int


def degree_report(f: CellularSphereMap, generator_sign: int = 1) -> DegreeReport:
    cls, mag = twisted_degree(f, generator_sign)
    ks, kf = k_values(f, generator_sign)
    return DegreeReport(cls, mag, tuple(ks), kf, mag)


SKELETON_CAVEAT = (
    "local indices are computed on cell interiors only; points of the "
    "(n-1)-skeleton are not examined"
)


@dataclass(frozen=True)
class DensityCheck:
    verdict: Verdict
    reason: str


def degree_density_verdict(f: CellularSphereMap) -> DensityCheck:
    """Multiple points are dense unless ``0 < A(f) <= k_f`` (when X is locally non-trivial)."""
    report = degree_report(f)
    if any(k == 0 for k in report.k_per_cell):
        return DensityCheck(Verdict.INCONCLUSIVE, "local nontriviality not established")
    a, kf = report.absolute_degree, report.kf
    if a == 0:
        return DensityCheck(Verdict.MULTIPLE_POINTS_DENSE, f"A(f) = 0; {SKELETON_CAVEAT}")
    if a > kf:
        return DensityCheck(Verdict.MULTIPLE_POINTS_DENSE, f"A(f) = {a} > k_f = {kf}; {SKELETON_CAVEAT}")
    return DensityCheck(Verdict.INCONCLUSIVE, f"0 < A(f) = {a} <= k_f = {kf}")


# -- document format ---------------------------------------------------------

def map_to_dict(f: CellularSphereMap) -> dict:
    return {
        "target": f.target.model.value,
        "cellDegrees": [
            {"cell": i, "targetCell": c.target_cell, "degree": c.degree}
            for i, c in enumerate(f.cell_degrees, start=1)
        ],
        "skeletonDegrees": list(f.skeleton_degrees),
    }


def map_from_dict(doc: dict, source: ComplexPresentation) -> CellularSphereMap:
    if not isinstance(doc, dict):
        raise InputError("map document must be an object")
    for key in ("target", "cellDegrees", "skeletonDegrees"):
        if key not in doc:
            raise InputError(f"map document is missing field '{key}'")
    try:
        model = TargetModel(doc["target"])
    except ValueError:
        raise InputError(f"field 'target' must be 'one-cell' or 'two-hemispheres', got {doc['target']!r}") from None
    entries = doc["cellDegrees"]
    if not isinstance(entries, list):
        raise InputError("field 'cellDegrees' must be a list")
    by_cell = {}
    for idx, e in enumerate(entries):
        if not isinstance(e, dict) or set(e) != {"cell", "targetCell", "degree"}:
            raise InputError(f"field 'cellDegrees[{idx}]' needs exactly cell, targetCell, degree")
        cell, deg = e["cell"], e["degree"]
        if isinstance(cell, bool) or not isinstance(cell, int) or isinstance(deg, bool) or not isinstance(deg, int):
            raise InputError(f"field 'cellDegrees[{idx}]': cell and degree must be integers")
        if cell in by_cell:
            raise InputError(f"field 'cellDegrees[{idx}]': cell {cell} listed twice")
        if not 1 <= cell <= source.m:
            raise InputError(f"field 'cellDegrees[{idx}]': cell {cell} outside 1..{source.m}")
        by_cell[cell] = CellDegree(e["targetCell"], deg)
    if len(by_cell) != source.m:
        missing = sorted(set(range(1, source.m + 1)) - set(by_cell))
        raise InputError(f"field 'cellDegrees' is missing cells {missing}")
    skel = doc["skeletonDegrees"]
    if not isinstance(skel, list) or any(isinstance(w, bool) or not isinstance(w, int) for w in skel):
        raise InputError("field 'skeletonDegrees' must be a list of integers")
    return CellularSphereMap(
        source,
        SphereTarget(source.n, model),
        tuple(by_cell[i] for i in range(1, source.m + 1)),
        tuple(skel),
    )


def dumps_map(f: CellularSphereMap) -> str:
    doc = map_to_dict(f)
    cells = ",\n    ".join(json.dumps(c) for c in doc["cellDegrees"])
    return (
        f'{{\n  "target": {json.dumps(doc["target"])},\n'
        f'  "cellDegrees": [\n    {cells}\n  ],\n'
        f'  "skeletonDegrees": {json.dumps(doc["skeletonDegrees"])}\n}}\n'
    )


def loads_map(text: str, source: ComplexPresentation) -> CellularSphereMap:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"map document: line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    return map_from_dict(doc, source)
