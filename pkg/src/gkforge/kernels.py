"""Kernel dispatch: the compiled extension when importable, else the fallback.

Set ``GKFORGE_PURE=1`` to force the pure-Python kernels.
"""

import os

if os.environ.get("GKFORGE_PURE", "") not in ("", "0"):
    from gkforge import _pykernels as _impl
else:
    try:
        from gkforge import _ckernels as _impl
    except ImportError:
        from gkforge import _pykernels as _impl

BACKEND = "cython" if _impl.__name__.endswith("_ckernels") else "python"

closure = _impl.closure
element_orders = _impl.element_orders
orbits = _impl.orbits
subgroup_closure = _impl.subgroup_closure
