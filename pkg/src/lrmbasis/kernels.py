"""Dispatch for the hot loops: compiled core when available, pure Python otherwise.

``BACKEND`` is ``"cython"`` or ``"python"``.  Setting the environment variable
``LRMBASIS_PURE_PYTHON=1`` before import forces the fallback.  Every public
function here is exact: the compiled kernels run only when int64 cannot
overflow (checked up front for products, detected during elimination), and
otherwise the pure-Python kernel recomputes with unbounded integers.
"""
from __future__ import annotations

import os
from typing import Sequence

import numpy as np

from . import _pykernels
from ._tables import mult_rows, mult_table

try:
    if os.environ.get("LRMBASIS_PURE_PYTHON"):
        raise ImportError("pure Python requested")
    from . import _ckernels
except ImportError:
    _ckernels = None

BACKEND = "python" if _ckernels is None else "cython"

_INT64_SAFE = 1 << 62


def _fits(a: Sequence[int], rows: Sequence[Sequence[int]]) -> bool:
    if not rows:
        return True
    bound = sum(abs(x) for x in a) * max(max((abs(y) for y in r), default=0) for r in rows)
    return bound < _INT64_SAFE


def convolve(a: Sequence[int], b: Sequence[int], n: int, backend: str | None = None) -> list[int]:
    """Dense coefficient list of ``a * b`` in the group algebra of S_n (lex indexing)."""
    backend = backend or BACKEND
    if backend == "cython" and _ckernels is not None and _fits(a, [b]):
        out = _ckernels.convolve(np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64),
                                 mult_table(n))
        return out.tolist()
    return _pykernels.convolve(list(a), list(b), mult_rows(n))


def left_multiply_rows(a: Sequence[int], rows: Sequence[Sequence[int]], n: int,
                       backend: str | None = None) -> list[list[int]]:
    """``[a * r for r in rows]`` with dense integer coefficient lists."""
    backend = backend or BACKEND
    if not rows:
        return []
    if backend == "cython" and _ckernels is not None and _fits(a, rows):
        out = _ckernels.left_multiply_rows(np.asarray(a, dtype=np.int64),
                                           np.asarray(rows, dtype=np.int64), mult_table(n))
        return out.tolist()
    return _pykernels.left_multiply_rows(list(a), [list(r) for r in rows], mult_rows(n))


def rref_int(rows: Sequence[Sequence[int]], width: int,
             backend: str | None = None) -> tuple[list[list[int]], list[int]]:
    """Integer Gauss-Jordan; see :func:`lrmbasis._pykernels.rref_int`."""
    backend = backend or BACKEND
    if not rows or width == 0:
        return [], []
    if backend == "cython" and _ckernels is not None:
        try:
            arr = np.asarray(rows, dtype=np.int64).reshape(len(rows), width)
        except OverflowError:
            arr = None
        if arr is not None:
            try:
                return _ckernels.rref_int(arr)
            except OverflowError:
                pass
    return _pykernels.rref_int([list(r) for r in rows])
