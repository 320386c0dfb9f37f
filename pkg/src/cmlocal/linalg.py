"""Backend selection for the sparse echelon kernel.

The compiled extension is used for prime fields when it imports; the
pure-Python class covers QQ and serves as the fallback.  Set
``CMLOCAL_PURE_PYTHON=1`` to force the fallback.
"""

import os

from ._echelon_py import Echelon as PyEchelon

try:
    if os.environ.get("CMLOCAL_PURE_PYTHON"):
        raise ImportError("pure Python forced")
    from ._echelon import Echelon as CEchelon
except ImportError:
    CEchelon = None

BACKEND = "compiled" if CEchelon is not None else "python"


def make_echelon(p, ncols, backend=None):
    """An empty echelon over GF(p) (or QQ when p == 0) with ``ncols`` columns."""
    use = backend or BACKEND
    if use == "compiled" and p and CEchelon is not None:
        return CEchelon(p, ncols)
    return PyEchelon(p, ncols)
