"""Backend selection for the hot polynomial kernels.

The compiled extension is used when it imports; setting ``RWHITNEY_PURE=1``
forces the pure-Python fallback.
"""

import os

from . import _kernels_py

if os.environ.get("RWHITNEY_PURE", "") not in ("", "0"):
    _compiled = None
else:
    try:
        from . import _kernels as _compiled
    except ImportError:
        _compiled = None

if _compiled is not None:
    mul_terms = _compiled.mul_terms
    add_terms = _compiled.add_terms
    BACKEND = "compiled"
else:
    mul_terms = _kernels_py.mul_terms
    add_terms = _kernels_py.add_terms
    BACKEND = "python"


def available_backends():
    """Map backend name -> kernel module for every importable backend."""
    out = {"python": _kernels_py}
    try:
        from . import _kernels
    except ImportError:
        return out
    out["compiled"] = _kernels
    return out
