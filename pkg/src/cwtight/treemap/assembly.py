"""One staged map per top cell, each landing in its own rotated tree copy."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ..errors import EmbeddingViolation, InputError
from .kernels import segment_violations
from .stages import DEFAULT_OFFSET, DEFAULT_RHO, StagedMap
from .tree import SEPARATION_TOL, TreeSpec


@dataclass(frozen=True, eq=False)
class ComplexAssembly:
    copies: tuple[TreeSpec, ...]
    cell_maps: tuple[StagedMap, ...]

    @property
    def cell_count(self) -> int:
        return len(self.copies)

    def evaluate_cell(self, i: int, points) -> tuple[np.ndarray, np.ndarray]:
        """Images of points in the closed disc of top cell ``i`` (1-based)."""
        if not 1 <= i <= self.cell_count:
            raise InputError(f"cell index {i} outside 1..{self.cell_count}")
        return self.cell_maps[i - 1].evaluate(points)

    def evaluate_skeleton(self, points) -> np.ndarray:
        # everything below the top dimension is sent to the common origin
        return np.zeros((len(np.atleast_2d(points)), 2))


def copy_intersections(copies) -> list[tuple[int, int, int, int]]:
    """Offending segment pairs ``(copy_a, seg_a, copy_b, seg_b)`` across copies.

    Trunks share the origin as a common endpoint, which is allowed; any other
    contact between different copies is reported.
    """
    starts = np.concatenate([c.starts for c in copies])
    ends = np.concatenate([c.ends for c in copies])
    owner = np.concatenate([np.full(len(c.starts), k) for k, c in enumerate(copies)])
    local = np.concatenate([np.arange(len(c.starts)) for c in copies])
    out = []
    for i, j in segment_violations(starts, ends, SEPARATION_TOL):
        if owner[i] != owner[j]:
            out.append((int(owner[i]), int(local[i]), int(owner[j]), int(local[j])))
    return out


def assemble_complex_map(m: int, tree: TreeSpec, n: int = 2, stage: int | None = None,
                         rho: float = DEFAULT_RHO, offset: float = DEFAULT_OFFSET) -> ComplexAssembly:
    if m < 1:
        raise InputError(f"cell count must be positive, got {m}")
    stage = tree.depth if stage is None else stage
    copies = tuple(tree if i == 0 else tree.rotated(2 * math.pi * i / m) for i in range(m))
    bad = copy_intersections(copies)
    if bad:
        a, sa, b, sb = bad[0]
        raise EmbeddingViolation(
            f"tree copies {a + 1} and {b + 1} meet away from the origin "
            f"(segments {sa} and {sb}, {len(bad)} offending pairs)"
        )
    maps = tuple(StagedMap(n, stage, c, rho, offset) for c in copies)
    return ComplexAssembly(copies, maps)
