"""Kernel backend selection.

The capped polynomial product is the hot loop of the whole engine.  A
compiled Cython variant is used when the extension was built; setting
QHAHN_PURE_PYTHON=1 (or a failed import) selects the pure-Python reference
kernel instead.  Both backends return identical term maps.
"""

import os

if os.environ.get("QHAHN_PURE_PYTHON"):
    from qhahn._accel._polymul_py import poly_mul_capped

    BACKEND = "python"
else:
    try:
        from qhahn._accel._polymul_c import poly_mul_capped  # type: ignore[no-redef]

        BACKEND = "c"
    except ImportError:
        from qhahn._accel._polymul_py import poly_mul_capped  # type: ignore[no-redef]

        BACKEND = "python"

__all__ = ["poly_mul_capped", "BACKEND"]
