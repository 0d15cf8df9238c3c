"""Pick the compiled kernels when available, else the numpy fallback.

Set ``POAC_PURE_PYTHON=1`` to force the fallback (used by the benchmark and
the backend-equivalence tests).
"""

import os

from . import _pykernels

BACKEND = "python"
kernels = _pykernels

if os.environ.get("POAC_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _kernels as _compiled
    except ImportError:
        pass
    else:
        kernels = _compiled
        BACKEND = "cython"

DECODE_OK = _pykernels.DECODE_OK
DECODE_TRUNCATED = _pykernels.DECODE_TRUNCATED
DECODE_OVERRUN = _pykernels.DECODE_OVERRUN
DECODE_INVALID = _pykernels.DECODE_INVALID
