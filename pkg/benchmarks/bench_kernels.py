"""Compare the compiled sampler kernels against the numpy fallback.

    python3 benchmarks/bench_kernels.py --samples 200000 --depth 8
"""

import argparse
import math
import timeit

import numpy as np

from cwtight.treemap import _pykernels, build_tree, sample_disc

try:
    from cwtight.treemap import _ckernels
except ImportError:
    _ckernels = None


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--samples", type=int, default=200_000)
    ap.add_argument("--depth", type=int, default=8)
    ap.add_argument("--dim", type=int, default=2)
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()

    tree = build_tree(0.45, math.pi / 4, args.depth)
    pts = sample_disc(args.dim, args.samples, 0)
    backends = [("numpy", _pykernels)] + ([("compiled", _ckernels)] if _ckernels else [])
    jobs = {
        "evaluate_stage": lambda k: k.evaluate_stage(pts, args.depth, 0.3, 0.35, tree.starts, tree.ends, 1e-12),
        "segment_violations": lambda k: k.segment_violations(tree.starts, tree.ends, 1e-12),
    }
    print(f"{args.samples} samples, dim {args.dim}, depth {args.depth} ({len(tree.starts)} segments)")
    for name, job in jobs.items():
        best = {}
        for label, impl in backends:
            best[label] = min(timeit.repeat(lambda: job(impl), number=1, repeat=args.repeat))
        line = "  ".join(f"{label} {t * 1e3:9.2f} ms" for label, t in best.items())
        if len(best) == 2:
            line += f"  speed-up {best['numpy'] / best['compiled']:.1f}x"
        print(f"{name:20s} {line}")
    if _ckernels is None:
        print("compiled kernels not built; only the fallback was timed")
    else:
        same = all(np.array_equal(np.asarray(a), np.asarray(b)) for a, b in zip(
            jobs["evaluate_stage"](_ckernels), jobs["evaluate_stage"](_pykernels)))
        print(f"outputs identical: {same}")


if __name__ == "__main__":
    main()
