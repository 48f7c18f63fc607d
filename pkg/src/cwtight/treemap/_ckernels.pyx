# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels for stage-map evaluation and segment separation.

Must stay numerically identical to ``_pykernels``: same operation order,
no fused multiply-add (the extension is built with -ffp-contract=off).
"""

import numpy as np
cimport numpy as cnp
from libc.math cimport sqrt

cnp.import_array()


def evaluate_stage(const double[:, ::1] points, int stage, double rho, double offset,
                   const double[:, ::1] seg_start, const double[:, ::1] seg_end,
                   double boundary_tol):
    cdef Py_ssize_t npts = points.shape[0]
    cdef Py_ssize_t dim = points.shape[1]
    images_arr = np.empty((npts, 2), dtype=np.float64)
    settled_arr = np.zeros(npts, dtype=np.int8)
    node_arr = np.zeros(npts, dtype=np.int64)
    cdef double[:, ::1] images = images_arr
    cdef cnp.int8_t[::1] settled = settled_arr
    cdef cnp.int64_t[::1] nodes = node_arr
    center_arr = np.zeros(dim, dtype=np.float64)
    cdef double[::1] c = center_arr
    cdef Py_ssize_t p, a
    cdef long node
    cdef int level
    cdef double r, rr, dc, d1, d2, diff, t, h, d_out, d_in, shift
    for p in range(npts):
        for a in range(dim):
            c[a] = 0.0
        r = 1.0
        node = 0
        level = 0
        while True:
            dc = 0.0
            for a in range(dim):
                diff = points[p, a] - c[a]
                dc = dc + diff * diff
            dc = sqrt(dc)
            if level == stage:
                d_out = r - dc
                if d_out <= boundary_tol * r:
                    t = 0.0
                else:
                    t = d_out / r
                images[p, 0] = seg_start[node, 0] + t * (seg_end[node, 0] - seg_start[node, 0])
                images[p, 1] = seg_start[node, 1] + t * (seg_end[node, 1] - seg_start[node, 1])
                settled[p] = 0
                break
            shift = offset * r
            rr = rho * r
            d1 = 0.0
            d2 = 0.0
            for a in range(dim):
                diff = points[p, a] - c[a]
                if a == 0:
                    d1 = d1 + (diff - shift) * (diff - shift)
                    d2 = d2 + (diff + shift) * (diff + shift)
                else:
                    d1 = d1 + diff * diff
                    d2 = d2 + diff * diff
            d1 = sqrt(d1)
            d2 = sqrt(d2)
            if d1 < rr:
                c[0] = c[0] + shift
                node = 2 * node + 1
                r = rr
                level += 1
                continue
            if d2 < rr:
                c[0] = c[0] - shift
                node = 2 * node + 2
                r = rr
                level += 1
                continue
            d_out = r - dc
            if d_out <= boundary_tol * r:
                d_out = 0.0
            d_in = (d1 if d1 < d2 else d2) - rr
            h = d_out / (d_out + d_in)
            images[p, 0] = seg_start[node, 0] + h * (seg_end[node, 0] - seg_start[node, 0])
            images[p, 1] = seg_start[node, 1] + h * (seg_end[node, 1] - seg_start[node, 1])
            settled[p] = 1 if (h > 0.0 and h < 1.0) else 0
            break
        nodes[p] = node
    return images_arr, settled_arr, node_arr


cdef inline double _orient(double ax, double ay, double bx, double by, double cx, double cy) nogil:
    return (bx - ax) * (cy - ay) - (by - ay) * (cx - ax)


cdef inline double _point_seg(double px, double py, double ax, double ay, double bx, double by) nogil:
    cdef double abx = bx - ax, aby = by - ay
    cdef double L = abx * abx + aby * aby
    cdef double t = 0.0
    if L > 0.0:
        t = ((px - ax) * abx + (py - ay) * aby) / L
        if t < 0.0:
            t = 0.0
        elif t > 1.0:
            t = 1.0
    cdef double dx = px - ax - t * abx, dy = py - ay - t * aby
    return sqrt(dx * dx + dy * dy)


def segment_violations(const double[:, ::1] starts, const double[:, ::1] ends, double tol):
    """Pairs ``(i, j)``, ``i < j``, of segments that touch where they must not."""
    cdef Py_ssize_t n = starts.shape[0]
    cdef Py_ssize_t i, j
    cdef double o1, o2, o3, o4, d, cross, dot
    cdef double ax, ay, bx, by, px, py, qx, qy, ux, uy, vx, vy
    cdef int shared
    out = []
    for i in range(n):
        ax = starts[i, 0]; ay = starts[i, 1]; bx = ends[i, 0]; by = ends[i, 1]
        for j in range(i + 1, n):
            px = starts[j, 0]; py = starts[j, 1]; qx = ends[j, 0]; qy = ends[j, 1]
            shared = 0
            if ax == px and ay == py:
                shared = 1; ux = bx - ax; uy = by - ay; vx = qx - px; vy = qy - py
            elif ax == qx and ay == qy:
                shared = 1; ux = bx - ax; uy = by - ay; vx = px - qx; vy = py - qy
            elif bx == px and by == py:
                shared = 1; ux = ax - bx; uy = ay - by; vx = qx - px; vy = qy - py
            elif bx == qx and by == qy:
                shared = 1; ux = ax - bx; uy = ay - by; vx = px - qx; vy = py - qy
            if shared:
                cross = ux * vy - uy * vx
                dot = ux * vx + uy * vy
                if dot > 0.0 and cross * cross <= tol * tol * (ux * ux + uy * uy) * (vx * vx + vy * vy):
                    out.append((i, j))
                continue
            o1 = _orient(ax, ay, bx, by, px, py)
            o2 = _orient(ax, ay, bx, by, qx, qy)
            o3 = _orient(px, py, qx, qy, ax, ay)
            o4 = _orient(px, py, qx, qy, bx, by)
            if ((o1 > 0.0 and o2 < 0.0) or (o1 < 0.0 and o2 > 0.0)) and \
               ((o3 > 0.0 and o4 < 0.0) or (o3 < 0.0 and o4 > 0.0)):
                out.append((i, j))
                continue
            d = _point_seg(px, py, ax, ay, bx, by)
            o1 = _point_seg(qx, qy, ax, ay, bx, by)
            if o1 < d:
                d = o1
            o1 = _point_seg(ax, ay, px, py, qx, qy)
            if o1 < d:
                d = o1
            o1 = _point_seg(bx, by, px, py, qx, qy)
            if o1 < d:
                d = o1
            if d <= tol:
                out.append((i, j))
    return out
