"""Backend selection for the column-operation kernels.

The compiled extension is used when it was built; otherwise (or when the
environment variable ``STSP_PURE_PYTHON`` is set to a non-empty value other
than ``0``) the pure-Python implementation is used.  Both backends give
identical results; the compiled integer kernels return None on int64 overflow
and this module then retries with Python integers.
"""
from __future__ import annotations

import os

from . import _pykernels


def _load_compiled():
    try:
        from . import _ckernels
    except ImportError:
        return None
    return _ckernels


def load_backend(name: str):
    if name == "python":
        return _pykernels
    if name == "cython":
        mod = _load_compiled()
        if mod is None:
            raise ImportError("compiled kernels are not built (run `pip install -e .`)")
        return mod
    raise ValueError(f"unknown backend {name!r}")


_force_py = os.environ.get("STSP_PURE_PYTHON", "") not in ("", "0")
_impl = None if _force_py else _load_compiled()
if _impl is None:
    _impl = _pykernels
BACKEND = _impl.BACKEND


def col_ops_mod(flat, d, ops, m, impl=None):
    impl = impl or _impl
    out = impl.col_ops_mod(flat, d, ops, m)
    if out is None:
        out = _pykernels.col_ops_mod(flat, d, ops, m)
    return out


def col_ops_int(flat, d, ops, impl=None):
    impl = impl or _impl
    out = impl.col_ops_int(flat, d, ops)
    if out is None:
        out = _pykernels.col_ops_int(flat, d, ops)
    return out


def matmul_mod(a, b, d, m, impl=None):
    impl = impl or _impl
    out = impl.matmul_mod(a, b, d, m)
    if out is None:
        out = _pykernels.matmul_mod(a, b, d, m)
    return out


def matmul_int(a, b, d, impl=None):
    impl = impl or _impl
    out = impl.matmul_int(a, b, d)
    if out is None:
        out = _pykernels.matmul_int(a, b, d)
    return out
