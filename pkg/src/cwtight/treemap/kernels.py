"""Kernel backend selection.

The compiled extension is used when it was built; otherwise the numpy
implementation. Set ``CWTIGHT_PURE_PYTHON=1`` to force the fallback.
"""

import os

from . import _pykernels

if os.environ.get("CWTIGHT_PURE_PYTHON"):
    _impl = _pykernels
    BACKEND = "python"
else:
    try:
        from . import _ckernels as _impl
        BACKEND = "compiled"
    except ImportError:
        _impl = _pykernels
        BACKEND = "python"

evaluate_stage = _impl.evaluate_stage
segment_violations = _impl.segment_violations
