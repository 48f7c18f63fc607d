"""Binary fractal trees in the plane.

Segments are stored in heap order: segment 0 is the trunk from the origin
to ``(0, 1)`` and the children of segment ``i`` are ``2i+1`` (turned by
``+angle``) and ``2i+2`` (turned by ``-angle``), each ``scale`` times as long
as their parent. A tree of depth d therefore has ``2**(d+1) - 1`` segments.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from ..errors import EmbeddingViolation, InputError
from .kernels import segment_violations

SEPARATION_TOL = 1e-12


@dataclass(frozen=True, eq=False)
class TreeSpec:
    scale: float
    angle: float
    depth: int
    starts: np.ndarray = field(repr=False)
    ends: np.ndarray = field(repr=False)
    rotation: float = 0.0

    @property
    def segments(self) -> list[tuple[tuple[float, float], tuple[float, float]]]:
        return [(tuple(s), tuple(e)) for s, e in zip(self.starts.tolist(), self.ends.tolist())]

    @property
    def trunk_length(self) -> float:
        return float(np.hypot(*(self.ends[0] - self.starts[0])))

    def segment_depth(self, i: int) -> int:
        return int(math.floor(math.log2(i + 1)))

    def segments_at_depth(self, d: int) -> range:
        return range(2 ** d - 1, 2 ** (d + 1) - 1)

    def rotated(self, theta: float) -> "TreeSpec":
        """Copy rotated by ``theta`` about the origin."""
        c, s = math.cos(theta), math.sin(theta)
        rot = np.array([[c, -s], [s, c]])
        starts = self.starts @ rot.T
        ends = self.ends @ rot.T
        # keep shared endpoints bit-identical after rotation
        starts[1:] = ends[(np.arange(1, len(ends)) - 1) // 2]
        starts[0] = 0.0
        for a in (starts, ends):
            a.setflags(write=False)
        return TreeSpec(self.scale, self.angle, self.depth, starts, ends, self.rotation + theta)


def build_tree(scale: float, angle: float, depth: int) -> TreeSpec:
    if not 0.0 < scale <= 0.5:
        raise InputError(f"branch scale must lie in (0, 1/2], got {scale}")
    if depth < 0:
        raise InputError(f"depth must be non-negative, got {depth}")
    if depth > 20:
        raise InputError("depth above 20 is not supported")
    count = 2 ** (depth + 1) - 1
    starts = np.zeros((count, 2))
    ends = np.zeros((count, 2))
    ends[0] = (0.0, 1.0)
    turns = [
        np.array([[math.cos(t), -math.sin(t)], [math.sin(t), math.cos(t)]])
        for t in (angle, -angle)
    ]
    for i in range((count - 1) // 2):
        step = (ends[i] - starts[i]) * scale
        for child, rot in zip((2 * i + 1, 2 * i + 2), turns):
            starts[child] = ends[i]
            ends[child] = ends[i] + rot @ step
    for a in (starts, ends):
        a.setflags(write=False)
    tree = TreeSpec(float(scale), float(angle), int(depth), starts, ends)
    bad = segment_violations(starts, ends, SEPARATION_TOL)
    if bad:
        i, j = bad[0]
        raise EmbeddingViolation(
            f"tree (scale={scale}, angle={angle}, depth={depth}) is not embedded: "
            f"segments {i} and {j} meet ({len(bad)} offending pairs)"
        )
    return tree
