"""Kernel backend selection.

The compiled extension is preferred when it imports cleanly; otherwise the
numpy fallback in ``_kernels_py`` is used.  Set ``ECC_PURE_PYTHON=1`` to
force the fallback (useful for benchmarking and debugging).
"""

import os

from ecctensor import _kernels_py

if os.environ.get("ECC_PURE_PYTHON") == "1":
    _impl = _kernels_py
    BACKEND = "numpy"
else:
    try:
        from ecctensor import _kernels as _impl  # type: ignore[no-redef]

        BACKEND = "cython"
    except ImportError:
        _impl = _kernels_py
        BACKEND = "numpy"

pairwise_pow_sum = _impl.pairwise_pow_sum
circle_potentials = _impl.circle_potentials
potential_gradient = _impl.potential_gradient
