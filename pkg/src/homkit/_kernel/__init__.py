"""Backend selection for the exact-rational kernels.

The compiled extension is used when it is importable; otherwise the
pure-Python reference implementation takes over.  Setting
``HOMKIT_PURE_PYTHON=1`` forces the fallback (useful for benchmarking
and for debugging the kernels themselves).
"""

import os

from . import _pykernel

if os.environ.get("HOMKIT_PURE_PYTHON", "") in ("1", "true", "yes"):
    _impl = _pykernel
else:
    try:
        from . import _cykernel as _impl
    except ImportError:
        _impl = _pykernel

BACKEND = _impl.BACKEND

rat_norm = _impl.rat_norm
mat_mul = _impl.mat_mul
mat_add = _impl.mat_add
mat_sub = _impl.mat_sub
mat_scale = _impl.mat_scale
rref = _impl.rref
bilinear_apply = _impl.bilinear_apply
t3_apply = _impl.t3_apply
t3_contract0_at = _impl.t3_contract0_at
axiom_j_holds = _impl.axiom_j_holds
