"""Graded (weight-homogeneous) matrices and their reduction kernels.

The compiled extension ``_graded`` is used when it imports and the field is
a prime field with p < 2**31; otherwise the pure-Python kernels run. Set
``WEIGHTHOM_PURE_PYTHON=1`` to force the fallback.
"""

from __future__ import annotations

import os

from . import _graded_py

if os.environ.get("WEIGHTHOM_PURE_PYTHON"):
    _compiled = None
else:
    try:
        from . import _graded as _compiled
    except ImportError:  # extension not built
        _compiled = None

BACKEND = "compiled" if _compiled is not None else "python"

from .graded import GradedMatrix, GradedReduction, graded_reduce, rank_over_field  # noqa: E402


def backend_module(name: str | None = None):
    """The kernel module for ``name`` ('compiled'/'python'; default: active)."""
    name = name or BACKEND
    if name == "compiled":
        if _compiled is None:
            raise RuntimeError("compiled kernels are not available")
        return _compiled
    return _graded_py


__all__ = ["BACKEND", "GradedMatrix", "GradedReduction", "graded_reduce",
           "rank_over_field", "backend_module"]
