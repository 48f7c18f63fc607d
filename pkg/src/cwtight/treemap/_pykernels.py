"""Pure-Python (numpy) versions of the compiled kernels.

Same signatures and the same floating-point operation order as
``_ckernels.pyx``, vectorised over points instead of looping.
"""

import numpy as np


def evaluate_stage(points, stage, rho, offset, seg_start, seg_end, boundary_tol):
    points = np.ascontiguousarray(points, dtype=np.float64)
    npts, dim = points.shape
    images = np.empty((npts, 2))
    settled = np.zeros(npts, dtype=np.int8)
    nodes = np.zeros(npts, dtype=np.int64)
    centers = np.zeros((npts, dim))
    radius = np.ones(npts)
    live = np.arange(npts)
    level = 0
    while live.size:
        x = points[live]
        c = centers[live]
        r = radius[live]
        node = nodes[live]
        diff = x - c
        dc = np.sqrt(_sq_sum(diff))
        if level == stage:
            d_out = r - dc
            t = np.where(d_out <= boundary_tol * r, 0.0, d_out / r)
            _place(images, live, node, t, seg_start, seg_end)
            settled[live] = 0
            break
        shift = offset * r
        rr = rho * r
        d1 = diff.copy()
        d1[:, 0] = diff[:, 0] - shift
        d2 = diff.copy()
        d2[:, 0] = diff[:, 0] + shift
        d1 = np.sqrt(_sq_sum(d1))
        d2 = np.sqrt(_sq_sum(d2))
        in1 = d1 < rr
        in2 = ~in1 & (d2 < rr)
        out = ~(in1 | in2)

        idx = live[out]
        d_out = (r - dc)[out]
        d_out = np.where(d_out <= boundary_tol * r[out], 0.0, d_out)
        d_in = np.where(d1[out] < d2[out], d1[out], d2[out]) - rr[out]
        h = d_out / (d_out + d_in)
        _place(images, idx, node[out], h, seg_start, seg_end)
        settled[idx] = ((h > 0.0) & (h < 1.0)).astype(np.int8)

        for mask, sign, child in ((in1, 1.0, 1), (in2, -1.0, 2)):
            sub = live[mask]
            centers[sub, 0] = c[mask, 0] + sign * shift[mask]
            nodes[sub] = 2 * node[mask] + child
            radius[sub] = rr[mask]
        live = live[in1 | in2]
        level += 1
    return images, settled, nodes


def _sq_sum(diff):
    # left-to-right accumulation, matching the compiled loop
    acc = diff[:, 0] * diff[:, 0]
    for a in range(1, diff.shape[1]):
        acc = acc + diff[:, a] * diff[:, a]
    return acc


def _place(images, idx, node, t, seg_start, seg_end):
    s = seg_start[node]
    e = seg_end[node]
    images[idx, 0] = s[:, 0] + t * (e[:, 0] - s[:, 0])
    images[idx, 1] = s[:, 1] + t * (e[:, 1] - s[:, 1])


def _point_seg(px, py, ax, ay, bx, by):
    abx = bx - ax
    aby = by - ay
    L = abx * abx + aby * aby
    with np.errstate(invalid="ignore", divide="ignore"):
        t = np.where(L > 0.0, ((px - ax) * abx + (py - ay) * aby) / L, 0.0)
    t = np.clip(t, 0.0, 1.0)
    dx = px - ax - t * abx
    dy = py - ay - t * aby
    return np.sqrt(dx * dx + dy * dy)


def segment_violations(starts, ends, tol):
    starts = np.ascontiguousarray(starts, dtype=np.float64)
    ends = np.ascontiguousarray(ends, dtype=np.float64)
    n = starts.shape[0]
    out = []
    for i in range(n - 1):
        ax, ay = starts[i]
        bx, by = ends[i]
        j = np.arange(i + 1, n)
        px, py = starts[j, 0], starts[j, 1]
        qx, qy = ends[j, 0], ends[j, 1]

        s_ps = (ax == px) & (ay == py)
        s_qs = ~s_ps & (ax == qx) & (ay == qy)
        s_pe = ~s_ps & ~s_qs & (bx == px) & (by == py)
        s_qe = ~s_ps & ~s_qs & ~s_pe & (bx == qx) & (by == qy)
        shared = s_ps | s_qs | s_pe | s_qe
        from_start = s_ps | s_qs
        ux = np.where(from_start, bx - ax, ax - bx)
        uy = np.where(from_start, by - ay, ay - by)
        from_p = s_ps | s_pe
        vx = np.where(from_p, qx - px, px - qx)
        vy = np.where(from_p, qy - py, py - qy)
        cross = ux * vy - uy * vx
        dot = ux * vx + uy * vy
        overlap = shared & (dot > 0.0) & (cross * cross <= tol * tol * (ux * ux + uy * uy) * (vx * vx + vy * vy))

        o1 = (bx - ax) * (py - ay) - (by - ay) * (px - ax)
        o2 = (bx - ax) * (qy - ay) - (by - ay) * (qx - ax)
        o3 = (qx - px) * (ay - py) - (qy - py) * (ax - px)
        o4 = (qx - px) * (by - py) - (qy - py) * (bx - px)
        proper = (((o1 > 0) & (o2 < 0)) | ((o1 < 0) & (o2 > 0))) & (((o3 > 0) & (o4 < 0)) | ((o3 < 0) & (o4 > 0)))
        d = np.minimum.reduce([
            _point_seg(px, py, ax, ay, bx, by),
            _point_seg(qx, qy, ax, ay, bx, by),
            _point_seg(ax, ay, px, py, qx, qy),
            _point_seg(bx, by, px, py, qx, qy),
        ])
        bad = overlap | (~shared & (proper | (d <= tol)))
        out.extend((i, int(jj)) for jj in j[bad])
    return out
