"""Kernel backend selection.

The compiled extension is preferred when importable; the pure-Python
fallback is always available.  Set DEFOURIER_PURE_PYTHON=1 to force the
fallback (useful for benchmarking and debugging).
"""

import os

from . import _kernels_py

if os.environ.get("DEFOURIER_PURE_PYTHON", "").strip() not in ("", "0"):
    kernels = _kernels_py
else:
    try:
        from . import _kernels as kernels
    except ImportError:
        kernels = _kernels_py

BACKEND = kernels.BACKEND_NAME


def backend_name():
    """Name of the active kernel backend: 'compiled' or 'python'."""
    return BACKEND
