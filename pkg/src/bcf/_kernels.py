"""Kernel selection: compiled speedups when available, pure Python otherwise.

Set the environment variable ``BCF_PURE_PYTHON`` to a non-empty value other
than ``0`` to force the pure-Python kernels even when the compiled extension
is installed.  ``IMPLEMENTATION`` reports which one is active.
"""

import os

from . import _kernels_py

_impl = _kernels_py
if os.environ.get("BCF_PURE_PYTHON", "") in ("", "0"):
    try:
        from . import _speedups as _impl
    except ImportError:
        _impl = _kernels_py

IMPLEMENTATION = "pure-python" if _impl is _kernels_py else "compiled"

rational_digits = _impl.rational_digits
convergent_triples = _impl.convergent_triples
backward_entry = _impl.backward_entry
convergent_matrix = _impl.convergent_matrix
gap_series = _impl.gap_series
