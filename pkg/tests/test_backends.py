"""The compiled kernels and the numpy fallback must agree bit for bit."""

import math
import os
import subprocess
import sys

import numpy as np
import pytest

from cwtight.treemap import _pykernels, build_tree, kernels, sample_disc, sample_sphere

try:
    from cwtight.treemap import _ckernels
except ImportError:  # extension not built
    _ckernels = None

needs_ext = pytest.mark.skipif(_ckernels is None, reason="compiled kernels not built")


@needs_ext
@pytest.mark.parametrize("scale,angle", [(0.45, math.pi / 4), (0.3, math.pi / 6)])
@pytest.mark.parametrize("n", [2, 3, 5])
def test_evaluate_stage_identical(scale, angle, n):
    tree = build_tree(scale, angle, 8)
    pts = np.vstack([sample_disc(n, 5000, 1), sample_sphere(n, 200, 2), np.zeros((1, n))])
    for m in range(9):
        args = (pts, m, 0.3, 0.35, tree.starts, tree.ends, 1e-12)
        for a, b in zip(_ckernels.evaluate_stage(*args), _pykernels.evaluate_stage(*args)):
            assert np.array_equal(np.asarray(a), np.asarray(b))


@needs_ext
def test_segment_violations_identical():
    rng = np.random.default_rng(4)
    starts = rng.random((120, 2))
    ends = starts + 0.2 * rng.standard_normal((120, 2))
    ends[5] = starts[7]  # a shared endpoint
    assert _ckernels.segment_violations(starts, ends, 1e-12) == _pykernels.segment_violations(starts, ends, 1e-12)
    bad = np.array([[0.0, 0.0], [0.0, 1.0], [0.0, 0.5]]), np.array([[0.0, 1.0], [0.0, 2.0], [0.0, 1.5]])
    assert _ckernels.segment_violations(*bad, 1e-12) == _pykernels.segment_violations(*bad, 1e-12) == [(0, 2), (1, 2)]


def test_environment_switch_forces_fallback():
    code = "from cwtight.treemap import kernels; print(kernels.BACKEND)"
    env = dict(os.environ, CWTIGHT_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"
    assert kernels.BACKEND == ("compiled" if _ckernels is not None and not os.environ.get("CWTIGHT_PURE_PYTHON") else "python")
