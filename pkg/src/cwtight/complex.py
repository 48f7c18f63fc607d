"""Two-stage CW complexes: a wedge of (n-1)-spheres with n-cells attached.

A complex is encoded by its ``m x k`` attaching-degree matrix: entry
``attach[i][j]`` is the degree with which the boundary of cell ``i+1`` wraps
around sphere ``j+1``. Column ``j`` is the relation vector contributed by
sphere ``j+1`` to the top cellular cochain group, so

    H^n(K) = Z^m / <columns of attach>.

Cells are numbered from 1 in every public signature, matching the document
format and the usual notation ``e_1, ..., e_m``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import InputError
from .lattice import (
    AbelianGroupPresentation,
    IntegerMatrix,
    QuotientElement,
    cokernel,
    quotient_image,
)


@dataclass(frozen=True)
class ComplexPresentation:
    n: int
    attach: IntegerMatrix

    def __post_init__(self):
        if not isinstance(self.attach, IntegerMatrix):
            object.__setattr__(self, "attach", IntegerMatrix.from_rows(self.attach))
        if isinstance(self.n, bool) or not isinstance(self.n, int):
            raise InputError(f"n must be an integer, got {self.n!r}")
        if self.n < 2:
            raise InputError(f"dimension n must be at least 2, got {self.n}")
        if self.attach.rows < 1:
            raise InputError("a complex needs at least one n-cell")

    @classmethod
    def from_lists(cls, n: int, cells: list[list[int]], spheres: int | None = None) -> "ComplexPresentation":
        if spheres is None:
            spheres = len(cells[0]) if cells else 0
        for i, row in enumerate(cells):
            if len(row) != spheres:
                raise InputError(f"cell {i + 1} lists {len(row)} degrees, expected {spheres}")
        return cls(n, IntegerMatrix.from_rows(cells, cols=spheres))

    @property
    def k(self) -> int:
        """Number of (n-1)-spheres in the wedge."""
        return self.attach.cols

    @property
    def m(self) -> int:
        """Number of n-cells."""
        return self.attach.rows

    def relation(self, j: int) -> tuple[int, ...]:
        """Relation vector of sphere ``j`` (1-based): the degrees of all cells on it."""
        return self.attach.column(j - 1)

    def _check_cell(self, i: int) -> None:
        if not 1 <= i <= self.m:
            raise InputError(f"cell index {i} outside 1..{self.m}")

    def unit(self, i: int) -> tuple[int, ...]:
        self._check_cell(i)
        return tuple(int(c == i - 1) for c in range(self.m))


def top_cohomology(K: ComplexPresentation) -> AbelianGroupPresentation:
    """``H^n(K)``: the cokernel of the attaching matrix read column-wise."""
    return cokernel(K.attach)


@dataclass(frozen=True)
class CodimOneCohomology:
    """``H^{n-1}(K)`` together with a flag for the n = 2 caveat.

    For n = 2 the attaching maps are words in a free group and only their
    abelianization is recorded; the group computed here is still correct
    but the presentation does not determine the homotopy type of K.
    """

    group: AbelianGroupPresentation
    abelianized_attaching: bool


def codim1_cohomology(K: ComplexPresentation) -> CodimOneCohomology:
    rank = K.attach.rank()
    return CodimOneCohomology(AbelianGroupPresentation(K.k - rank), K.n == 2)


def cell_class(K: ComplexPresentation, i: int, generator_sign: int = 1) -> QuotientElement:
    """Class of the cochain dual to cell ``i`` in a cyclic ``H^n(K)``.

    Raises :class:`~cwtight.errors.NonCyclicQuotient` if ``H^n(K)`` is not cyclic.
    """
    return quotient_image(K.attach, K.unit(i), generator_sign)


# -- document format ---------------------------------------------------------

def complex_to_dict(K: ComplexPresentation) -> dict:
    return {"n": K.n, "spheres": K.k, "cells": K.attach.tolist()}


def complex_from_dict(doc: dict) -> ComplexPresentation:
    if not isinstance(doc, dict):
        raise InputError("complex document must be an object")
    for key in ("n", "spheres", "cells"):
        if key not in doc:
            raise InputError(f"complex document is missing field '{key}'")
    extra = set(doc) - {"n", "spheres", "cells"}
    if extra:
        raise InputError(f"complex document has unknown fields {sorted(extra)}")
    n, k, cells = doc["n"], doc["spheres"], doc["cells"]
    if isinstance(k, bool) or not isinstance(k, int) or k < 0:
        raise InputError(f"field 'spheres' must be a non-negative integer, got {k!r}")
    if not isinstance(cells, list) or not cells:
        raise InputError("field 'cells' must be a non-empty list of integer lists")
    for i, row in enumerate(cells):
        if not isinstance(row, list) or any(isinstance(e, bool) or not isinstance(e, int) for e in row):
            raise InputError(f"field 'cells[{i}]' must be a list of integers")
    return ComplexPresentation.from_lists(n, cells, spheres=k)


def dumps_complex(K: ComplexPresentation) -> str:
    """Canonical text form; ``loads_complex(dumps_complex(K)) == K``."""
    doc = complex_to_dict(K)
    rows = ",\n    ".join(json.dumps(r) for r in doc["cells"])
    return f'{{\n  "n": {doc["n"]},\n  "spheres": {doc["spheres"]},\n  "cells": [\n    {rows}\n  ]\n}}\n'


def loads_complex(text: str) -> ComplexPresentation:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"complex document: line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    return complex_from_dict(doc)
