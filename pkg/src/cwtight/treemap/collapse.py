"""The annulus collapse map ``D^{n-1} x I -> S^{n-1} x I``, ``(x, t) -> (p(x), t)``.

``p`` is the radial suspension collapse: a point at radius ``rho`` in
direction ``u`` goes to ``(sin(pi rho) u, cos(pi rho))``. The centre lands on
``+e_n``, the whole boundary sphere on the base point ``-e_n``, and the open
disc is mapped injectively onto the complement of the base point.
"""

from __future__ import annotations

import math

import numpy as np

from ..errors import InputError


def basepoint(n: int) -> np.ndarray:
    """Collapse point of ``S^{n-1}`` inside ``R^n``."""
    b = np.zeros(n)
    b[-1] = -1.0
    return b


def suspension_collapse(x) -> np.ndarray:
    x = np.asarray(x, dtype=float).reshape(-1)
    r = float(np.sqrt(np.dot(x, x)))
    if r > 1.0 + 1e-12:
        raise InputError(f"point of norm {r} lies outside the unit disc")
    if r >= 1.0:
        return basepoint(x.size + 1)
    if r == 0.0:
        out = np.zeros(x.size + 1)
        out[-1] = 1.0
        return out
    return np.append(math.sin(math.pi * r) * x / r, math.cos(math.pi * r))


def collapse_map(x, t: float) -> tuple[np.ndarray, float]:
    """Image of ``(x, t)`` as a point of ``S^{n-1}`` (in ``R^n``) and a height."""
    if not 0.0 <= t <= 1.0:
        raise InputError(f"height t must lie in [0, 1], got {t}")
    return suspension_collapse(x), float(t)


def collapse_map_many(xs: np.ndarray, ts: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Vectorised :func:`collapse_map` for arrays of shape ``(N, n-1)`` and ``(N,)``."""
    xs = np.atleast_2d(np.asarray(xs, dtype=float))
    ts = np.asarray(ts, dtype=float)
    r = np.sqrt(np.einsum("ij,ij->i", xs, xs))
    if np.any(r > 1.0 + 1e-12) or np.any((ts < 0) | (ts > 1)):
        raise InputError("inputs outside D^{n-1} x [0, 1]")
    r = np.minimum(r, 1.0)
    with np.errstate(invalid="ignore", divide="ignore"):
        u = np.where(r[:, None] > 0, xs / r[:, None], 0.0)
    sphere = np.column_stack([np.sin(np.pi * r)[:, None] * u, np.cos(np.pi * r)])
    sphere[r >= 1.0] = basepoint(xs.shape[1] + 1)
    return sphere, ts
