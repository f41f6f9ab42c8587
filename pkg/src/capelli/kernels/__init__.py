"""Hot loops over dense group-algebra arrays mod a prime.

The backend is chosen by the ``CAPELLI_BACKEND`` environment variable
(``numba`` or ``numpy``).  The default is numba when it imports, numpy
otherwise.
"""

from __future__ import annotations

import os

from . import _numpy

BACKEND = os.environ.get("CAPELLI_BACKEND", "numba").strip().lower()

if BACKEND == "numba":
    try:
        from . import _numba as _impl
    except ImportError:  # numba missing: run the numpy versions
        _impl = _numpy
        BACKEND = "numpy"
elif BACKEND == "numpy":
    _impl = _numpy
else:
    raise ImportError(f"unknown CAPELLI_BACKEND {BACKEND!r}; use 'numba' or 'numpy'")

linear_factor_step = _impl.linear_factor_step
convolve_right = _impl.convolve_right

__all__ = ["BACKEND", "linear_factor_step", "convolve_right"]
