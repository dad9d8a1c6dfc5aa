"""Kernel dispatch: compiled int64 kernels when available, Python otherwise.

Set ``QPART_PURE_PYTHON=1`` before import to force the fallback.  The
compiled kernels return ``None`` on int64 overflow, in which case the call
is repeated with arbitrary-precision Python ints, so results never depend
on the backend.
"""
import os

from qpart import _pykernels

_ext = None
if not os.environ.get("QPART_PURE_PYTHON"):
    try:
        from qpart import _ckernels as _ext
    except ImportError:
        _ext = None

BACKEND = "cython" if _ext is not None else "python"


def _dispatch(name):
    fallback = getattr(_pykernels, name)
    if _ext is None:
        return fallback
    fast = getattr(_ext, name)

    def kernel(*args):
        out = fast(*args)
        return fallback(*args) if out is None else out

    kernel.__name__ = name
    kernel.__doc__ = fallback.__doc__
    return kernel


mul_trunc = _dispatch("mul_trunc")
invert_trunc = _dispatch("invert_trunc")
run_dp_counts = _dispatch("run_dp_counts")
run_dp_refined = _dispatch("run_dp_refined")
overpartition_counts = _dispatch("overpartition_counts")


def backends():
    """Map backend name to a namespace of kernels, for tests and benchmarks."""
    out = {"python": _pykernels}
    if _ext is not None:
        out["cython"] = _ext
    return out
