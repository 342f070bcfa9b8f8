"""Kernel backend selection.

The hot loops (term-dict arithmetic, ladder operator application, exact
nullspace elimination) exist twice: a compiled Cython extension and a
pure-Python fallback with the same interface. The compiled build is
preferred when importable; set BINFORMS_PURE=1 to force the fallback.
"""

import os

if os.environ.get("BINFORMS_PURE"):
    from . import _kernels_py as kernels
else:
    try:
        from . import _kernels_cy as kernels  # type: ignore[no-redef]
    except ImportError:
        from . import _kernels_py as kernels  # type: ignore[no-redef]


def backend_name() -> str:
    """Name of the active kernel backend: "compiled" or "pure"."""
    return kernels.BACKEND
