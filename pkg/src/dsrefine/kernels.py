"""Backend selection for the F_p hot loops.

The compiled extension is used when it was built and the prime fits in
31 bits; otherwise the pure-Python module runs.  Set
``DSREFINE_PURE_PYTHON=1`` to force the fallback.
"""

import os

from . import _kernel_py

MAX_COMPILED_PRIME = 2**31

_compiled = None
if not os.environ.get("DSREFINE_PURE_PYTHON"):
    try:
        from . import _kernel as _compiled
    except ImportError:
        _compiled = None

BACKEND = "cython" if _compiled is not None else "python"


def _pick(p):
    if _compiled is not None and p < MAX_COMPILED_PRIME:
        return _compiled
    return _kernel_py


def rref_mod_p(rows, ncols, p):
    return _pick(p).rref_mod_p(rows, ncols, p)


def matmul_mod_p(a, b, p):
    return _pick(p).matmul_mod_p(a, b, p)
