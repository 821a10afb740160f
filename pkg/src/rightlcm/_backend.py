"""Select the kernel implementation at import time.

The compiled extension is preferred; RIGHTLCM_PURE=1 forces the
pure-Python fallback (used by the benchmark and the equivalence tests).
"""

import os

if os.environ.get("RIGHTLCM_PURE"):
    from . import _kernels_py as kernels
else:
    try:
        from . import _kernels as kernels  # type: ignore[attr-defined]
    except ImportError:
        from . import _kernels_py as kernels

__all__ = ["kernels"]
