"""Point-cloud tables and SVG pictures of sampled stage maps."""

from __future__ import annotations

import csv
import io

import numpy as np

from .tree import TreeSpec


def point_cloud_csv(points: np.ndarray, images: np.ndarray, settled: np.ndarray) -> str:
    """One row per sample: input coordinates, image coordinates, injective flag.

    Floats use ``repr`` so the table reproduces the computed doubles exactly.
    """
    n = points.shape[1]
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow([f"x{i + 1}" for i in range(n)] + ["gx", "gy", "injective"])
    for p, g, s in zip(points.tolist(), images.tolist(), settled.tolist()):
        w.writerow([repr(v) for v in p] + [repr(g[0]), repr(g[1]), int(s)])
    return buf.getvalue()


def render_svg(tree: TreeSpec, images: np.ndarray, settled: np.ndarray, size: int = 640) -> str:
    lo = np.minimum(tree.starts.min(axis=0), tree.ends.min(axis=0))
    hi = np.maximum(tree.starts.max(axis=0), tree.ends.max(axis=0))
    pad = 0.05 * float(max(hi - lo))
    lo, hi = lo - pad, hi + pad
    scale = size / float(max(hi - lo))

    def px(p):
        return f"{(p[0] - lo[0]) * scale:.3f}", f"{(hi[1] - p[1]) * scale:.3f}"

    width = int(round((hi[0] - lo[0]) * scale))
    height = int(round((hi[1] - lo[1]) * scale))
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        '<rect width="100%" height="100%" fill="white"/>',
        '<g stroke="#444" stroke-width="1" stroke-linecap="round">',
    ]
    for s, e in zip(tree.starts, tree.ends):
        (x1, y1), (x2, y2) = px(s), px(e)
        out.append(f'<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}"/>')
    out.append("</g>")
    for flag, colour in ((False, "#d62728"), (True, "#1f77b4")):
        out.append(f'<g fill="{colour}" fill-opacity="0.5">')
        for p in images[settled == flag]:
            x, y = px(p)
            out.append(f'<circle cx="{x}" cy="{y}" r="1.2"/>')
        out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
