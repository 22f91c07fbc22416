"""Backend selection for the elimination kernels.

The compiled extension is used when it was built; otherwise, or when the
environment variable ``JUMPLOCI_PURE_PYTHON`` is set to a non-empty value
other than ``0``, the pure-Python fallback is loaded.
"""

import os

from . import _pykernels

_force_pure = os.environ.get("JUMPLOCI_PURE_PYTHON", "") not in ("", "0")

if _force_pure:
    _impl = _pykernels
    BACKEND = "python"
else:
    try:
        from . import _kernels as _impl
        BACKEND = "compiled"
    except ImportError:
        _impl = _pykernels
        BACKEND = "python"

rank_mod_p = _impl.rank_mod_p
bareiss_rank = _impl.bareiss_rank

__all__ = ["BACKEND", "rank_mod_p", "bareiss_rank"]
