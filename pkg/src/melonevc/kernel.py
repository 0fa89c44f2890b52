"""Select the compiled kernel when it is built, else the pure-Python one.

Set ``MELONEVC_PURE_PYTHON=1`` to force the fallback.
"""

from __future__ import annotations

import os

from . import _kernel_py

if os.environ.get("MELONEVC_PURE_PYTHON"):
    _impl = _kernel_py
else:
    try:
        from . import _kernel as _impl  # type: ignore[attr-defined]
    except ImportError:
        _impl = _kernel_py

BACKEND: str = _impl.BACKEND
MAX_COMPILED_N = 64

shift_assignment = _kernel_py.shift_assignment


def _pick(n: int):
    return _impl if n <= MAX_COMPILED_N else _kernel_py


def vertex_covers(n, edges, k):
    return _pick(n).vertex_covers(n, edges, k)


def shift_exists(c, c2, v, w, closed):
    return _pick(len(closed)).shift_exists(c, c2, v, w, closed)


def safe_set(closed, edges, covers):
    return _pick(len(closed)).safe_set(closed, edges, covers)
