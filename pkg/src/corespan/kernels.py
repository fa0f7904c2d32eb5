"""Kernel selection: the compiled extension when importable, else pure Python.

Set ``CORESPAN_PURE_PYTHON=1`` to force the fallback.
"""
import os

from . import _kernels_py

if os.environ.get("CORESPAN_PURE_PYTHON"):
    _impl = _kernels_py
else:
    try:
        from . import _kernels as _impl
    except ImportError:
        _impl = _kernels_py

BACKEND = "python" if _impl is _kernels_py else "cython"

KernelError = _kernels_py.KernelError
cell_counts = _impl.cell_counts
divisible_arm_legs = _impl.divisible_arm_legs
involute_parts = _impl.involute_parts
arrival_words = _impl.arrival_words
walk_back = _impl.walk_back
arrival_counts = _impl.arrival_counts
