"""Backend selection for the inner-loop kernels.

The compiled extension is used when it was built; set
``WEDGECOVER_PURE_PYTHON=1`` to force the numpy fallback.
"""
import os

from . import _kernels_py

if os.environ.get("WEDGECOVER_PURE_PYTHON"):
    _impl = _kernels_py
    BACKEND = "python"
else:
    try:
        from . import _kernels as _impl
        BACKEND = "compiled"
    except ImportError:
        _impl = _kernels_py
        BACKEND = "python"

spinor_map = _impl.spinor_map
local_lift = _impl.local_lift
lift_path = _impl.lift_path
