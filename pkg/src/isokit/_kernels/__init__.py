"""Hot polynomial kernels over Z/pZ.

The compiled extension is used when it was built; otherwise the pure-Python
module is used.  Setting ``ISOKIT_PURE_PYTHON=1`` forces the fallback.
"""

import os

from isokit._kernels import _pykernels as python

compiled = None
if not os.environ.get("ISOKIT_PURE_PYTHON"):
    try:
        from isokit._kernels import _ckernels as compiled
    except ImportError:  # extension not built
        compiled = None

active = compiled if compiled is not None else python
BACKEND = "compiled" if compiled is not None else "python"

mul = active.mul
school_mul = active.school_mul
divmod_ = active.divmod_


def backends():
    """Mapping of available backend names to kernel modules."""
    out = {"python": python}
    if compiled is not None:
        out["compiled"] = compiled
    return out
