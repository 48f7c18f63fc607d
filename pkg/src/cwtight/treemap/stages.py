"""Stage maps ``g_m: D^n -> T`` converging to a map with dense single points.

Construction used here (a concrete preset, not a unique choice):

* Stage 0 sends ``x`` to ``(0, 1 - |x|)`` on the trunk: the boundary sphere
  goes to the origin and the centre to the trunk tip. The whole disc is
  *active*.
* Every active disc ``B`` (centre c, radius r) carries a tree segment e and
  is mapped radially onto it, boundary to the base of e, centre to its tip.
* Refining B places two sub-discs of radius ``rho*r`` at ``c +- offset*r``
  along the first axis. Sub-disc ``+`` becomes active for child ``2e+1``,
  sub-disc ``-`` for child ``2e+2``. On the rest of B the map is frozen as
  ``base + h (tip - base)`` with ``h = d_out / (d_out + d_in)`` (distances to
  the outer sphere and to the nearer sub-disc), so it is continuous, equal
  to the base on the outer sphere and to the tip on both inner spheres.

Points in a frozen region never move again. Such a point is flagged as
*settled* when ``0 < h < 1``. The settled region is where samples have
pairwise distinct images: images inside one region are separated by their
level sets, and different regions map to different open segments. A
continuous map from an open n-dimensional set into a tree cannot be
injective, so this is the sampled sense of "injective region", not a
pointwise guarantee.

Consecutive stages differ only inside stage-m active discs, by at most the
segment length ``L * scale**m``. On the frozen part both maps lie on the
same segment; inside a sub-disc the bound needs
``sqrt(offset^2 + scale^2 + 2 offset scale cos(angle)) <= 1`` and
``offset + rho <= 1``, which the constructor checks.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.spatial import cKDTree

from ..errors import InputError
from .kernels import evaluate_stage
from .tree import TreeSpec

DEFAULT_RHO = 0.3
DEFAULT_OFFSET = 0.35
BOUNDARY_TOL = 1e-12


@dataclass(frozen=True)
class ActiveDisc:
    center: tuple[float, ...]
    radius: float
    segment: int


@dataclass(frozen=True, eq=False)
class StagedMap:
    n: int
    stage: int
    tree: TreeSpec
    rho: float = DEFAULT_RHO
    offset: float = DEFAULT_OFFSET

    def __post_init__(self):
        if self.n < 2:
            raise InputError(f"disc dimension must be at least 2, got {self.n}")
        if not 0 <= self.stage <= self.tree.depth:
            raise InputError(f"stage {self.stage} outside 0..{self.tree.depth}")
        if not 0.0 < self.rho < 0.5:
            raise InputError(f"radius ratio must lie in (0, 1/2), got {self.rho}")
        if not self.rho < self.offset <= 1.0 - self.rho:
            raise InputError(
                f"offset {self.offset} must exceed rho and keep sub-discs inside the disc"
            )
        s, a, d = self.tree.scale, self.tree.angle, self.offset
        if math.sqrt(d * d + s * s + 2 * d * s * math.cos(a)) > 1.0:
            raise InputError("offset too large for the uniform Cauchy bound with this tree")

    def evaluate(self, points) -> tuple[np.ndarray, np.ndarray]:
        """Images (``N x 2``) and settled flags (``N`` booleans) of ``N x n`` points."""
        images, settled, _ = self.evaluate_full(points)
        return images, settled

    def evaluate_full(self, points):
        pts = np.ascontiguousarray(np.atleast_2d(points), dtype=np.float64)
        if pts.shape[1] != self.n:
            raise InputError(f"points must have {self.n} coordinates")
        images, settled, nodes = evaluate_stage(
            pts, self.stage, self.rho, self.offset,
            np.ascontiguousarray(self.tree.starts), np.ascontiguousarray(self.tree.ends),
            BOUNDARY_TOL,
        )
        return np.asarray(images), np.asarray(settled).astype(bool), np.asarray(nodes)

    def __call__(self, x) -> np.ndarray:
        return self.evaluate(np.asarray(x, dtype=float).reshape(1, -1))[0][0]

    def active_discs(self) -> list[ActiveDisc]:
        discs = [ActiveDisc((0.0,) * self.n, 1.0, 0)]
        for _ in range(self.stage):
            nxt = []
            for disc in discs:
                shift = self.offset * disc.radius
                for sign, child in ((1.0, 1), (-1.0, 2)):
                    c = list(disc.center)
                    c[0] = c[0] + sign * shift
                    nxt.append(ActiveDisc(tuple(c), self.rho * disc.radius, 2 * disc.segment + child))
            discs = nxt
        return discs

    @property
    def active_volume_fraction(self) -> float:
        """Share of the disc volume still active (1 at stage 0)."""
        return (2 * self.rho ** self.n) ** self.stage

    @property
    def cauchy_bound(self) -> float:
        """Upper bound on ``sup |g_{m+1} - g_m|`` for this stage m."""
        return self.tree.trunk_length * self.tree.scale ** self.stage


def stage_map(n: int, tree: TreeSpec, m: int, rho: float = DEFAULT_RHO,
              offset: float = DEFAULT_OFFSET) -> StagedMap:
    return StagedMap(n, m, tree, rho, offset)


def sample_disc(n: int, count: int, seed: int) -> np.ndarray:
    """``count`` points uniform in the unit n-disc, deterministic in ``seed``."""
    rng = np.random.default_rng(seed)
    g = rng.standard_normal((count, n))
    g /= np.linalg.norm(g, axis=1)[:, None]
    r = rng.random(count) ** (1.0 / n)
    return g * r[:, None]


def sample_sphere(n: int, count: int, seed: int) -> np.ndarray:
    """``count`` points on the boundary sphere of the unit n-disc."""
    rng = np.random.default_rng(seed)
    g = rng.standard_normal((count, n))
    return g / np.linalg.norm(g, axis=1)[:, None]


@dataclass(frozen=True)
class SinglePointStats:
    stage: int
    sample_count: int
    injective_fraction: float
    active_fraction: float
    eps_collision_fraction: float
    epsilon: float


def eps_collision_fraction(images: np.ndarray, epsilon: float) -> float:
    """Fraction of images lying within ``epsilon`` of some other image."""
    if len(images) < 2:
        return 0.0
    dist, _ = cKDTree(images).query(images, k=2)
    return float(np.count_nonzero(dist[:, 1] <= epsilon)) / len(images)


def single_point_stats(g: StagedMap, sample_count: int, epsilon: float, seed: int,
                       points: np.ndarray | None = None) -> SinglePointStats:
    if sample_count < 1:
        raise InputError("sample count must be positive")
    if epsilon <= 0:
        raise InputError("epsilon must be positive")
    if points is None:
        points = sample_disc(g.n, sample_count, seed)
    images, settled = g.evaluate(points)
    frac = float(np.count_nonzero(settled)) / len(points)
    return SinglePointStats(
        g.stage, len(points), frac, 1.0 - frac, eps_collision_fraction(images, epsilon), float(epsilon)
    )
