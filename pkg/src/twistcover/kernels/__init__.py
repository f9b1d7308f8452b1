"""Kernel backend selection.

The compiled extension is used when available; the pure-Python module is the
fallback and the reference.  Set TWISTCOVER_PURE=1 to force the fallback
(useful for benchmarking and for debugging kernel-level behavior).
"""

import os

from . import pure

compiled = None
try:
    from . import _compiled as compiled  # type: ignore[no-redef]
except ImportError:
    compiled = None

if compiled is not None and not os.environ.get("TWISTCOVER_PURE"):
    _impl = compiled
    BACKEND = "compiled"
else:
    _impl = pure
    BACKEND = "python"

CONVERGED = pure.CONVERGED
FLOAT_LIMIT = pure.FLOAT_LIMIT
ITER_CAP = pure.ITER_CAP

cheb_ratio = _impl.cheb_ratio
phi_delta = _impl.phi_delta
bisect_phi_delta = _impl.bisect_phi_delta
cover_compose = _impl.cover_compose

__all__ = [
    "BACKEND",
    "CONVERGED",
    "FLOAT_LIMIT",
    "ITER_CAP",
    "bisect_phi_delta",
    "cheb_ratio",
    "compiled",
    "cover_compose",
    "phi_delta",
    "pure",
]
