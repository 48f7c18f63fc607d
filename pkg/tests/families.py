"""Seeded random families of complexes and cellular maps shared by several tests."""

from __future__ import annotations

import random

from cwtight.complex import ComplexPresentation, top_cohomology
from cwtight.degree import CellDegree, CellularSphereMap, SphereTarget, TargetModel
from cwtight.lattice import AbelianGroupPresentation

CYCLIC_TOPS = (AbelianGroupPresentation(1), AbelianGroupPresentation(0, (2,)), AbelianGroupPresentation(0))


def random_complex(rng: random.Random, max_m=4, max_k=4, lo=-4, hi=4, n=None) -> ComplexPresentation:
    m = rng.randint(1, max_m)
    k = rng.randint(0, max_k)
    rows = [[rng.randint(lo, hi) for _ in range(k)] for _ in range(m)]
    return ComplexPresentation.from_lists(n or rng.randint(2, 4), rows, spheres=k)


def hemisphere_power_map(rng: random.Random, max_m=4, max_k=3, max_deg=5, tries=1000):
    """A chain-compatible map to the two-hemisphere sphere with cyclic ``H^n``.

    Sphere degrees W are drawn first; each cell then has to cover
    ``(attach @ W)_i`` with sign +1 on the north cell or -1 on the south cell.
    Cells with ``(attach @ W)_i == 0`` get degree 0 on a random hemisphere.
    """
    for _ in range(tries):
        m, k = rng.randint(1, max_m), rng.randint(0, max_k)
        W = [rng.randint(-2, 2) for _ in range(k)]
        rows = [[rng.randint(-3, 3) for _ in range(k)] for _ in range(m)]
        K = ComplexPresentation.from_lists(rng.randint(2, 4), rows, spheres=k)
        if top_cohomology(K) not in CYCLIC_TOPS:
            continue
        values = K.attach @ tuple(W)
        if any(abs(v) > max_deg for v in values):
            continue
        cells = []
        for v in values:
            if v > 0 or (v == 0 and rng.random() < 0.5):
                cells.append(CellDegree("north", v))
            else:
                cells.append(CellDegree("south", -v))
        return CellularSphereMap(K, SphereTarget(K.n, TargetModel.TWO_HEMISPHERES), tuple(cells), tuple(W))
    raise RuntimeError("no constructible map found")
