"""Backend selection and drivers for the integer box scans.

The environment variable EPOLY_BACKEND picks "numba" or "numpy"; unset, the
compiled kernels are used whenever numba imports. Both backends emit points
in odometer order over the box (first coordinate slowest), so results are
byte-identical across backends.
"""

import os

import numpy as np

from .errors import EpolyError, check_budget

try:
    from . import _scan_numba

    HAVE_NUMBA = True
except ImportError:
    _scan_numba = None
    HAVE_NUMBA = False

from . import _scan_numpy


def resolve_backend(backend=None):
    """Return the backend name to use, honoring EPOLY_BACKEND."""
    if backend is None:
        backend = os.environ.get("EPOLY_BACKEND") or None
    if backend is None:
        return "numba" if HAVE_NUMBA else "numpy"
    if backend not in ("numba", "numpy"):
        raise EpolyError(f"unknown backend {backend!r}")
    if backend == "numba" and not HAVE_NUMBA:
        raise EpolyError("backend 'numba' requested but numba is not importable")
    return backend


def _as_matrix(rows, d):
    arr = np.asarray(rows, dtype=np.int64)
    if arr.size == 0:
        arr = arr.reshape(0, d)
    return np.ascontiguousarray(arr)


def scan_linear(d, lo, hi, A, b, B, c, fill=True, backend=None):
    """Integer points x of [lo, hi]^d with A x <= b and B |x| <= c.

    Returns (count, points) where points is a (count, d) int64 array when
    fill is true and empty otherwise. Rows of B must be nonnegative.
    """
    if hi < lo:
        return 0, np.empty((0, d), dtype=np.int64)
    check_budget((hi - lo + 1) ** d, "box scan")
    A = _as_matrix(A, d)
    B = _as_matrix(B, d)
    b = np.ascontiguousarray(np.asarray(b, dtype=np.int64).reshape(-1))
    c = np.ascontiguousarray(np.asarray(c, dtype=np.int64).reshape(-1))
    if A.shape[0] != b.shape[0] or B.shape[0] != c.shape[0]:
        raise EpolyError("row/rhs length mismatch in scan_linear")
    if B.size and B.min() < 0:
        raise EpolyError("absolute-value rows must be nonnegative")
    if d == 0:
        ok = bool((b >= 0).all() and (c >= 0).all())
        n = 1 if ok else 0
        return n, np.zeros((n if fill else 0, 0), dtype=np.int64)
    name = resolve_backend(backend)
    if name == "numba":
        probe = np.empty((0, d), dtype=np.int64)
        count = _scan_numba.scan_linear_kernel(d, lo, hi, A, b, B, c, probe)
        if not fill:
            return count, probe
        out = np.empty((count, d), dtype=np.int64)
        _scan_numba.scan_linear_kernel(d, lo, hi, A, b, B, c, out)
        return count, out
    return _scan_numpy.scan_linear(d, lo, hi, A, b, B, c, fill)


def scan_lepp(d, m, pairs, fill=True, backend=None):
    """Maps [-m, m]^d whose absolute values increase weakly along pairs.

    Each pair (a, b) demands |x[a]| <= |x[b]|, with x[b] >= 0 on ties.
    """
    if m < 0:
        raise EpolyError("negative dilate")
    check_budget((2 * m + 1) ** d, "box scan")
    pa = np.ascontiguousarray(np.asarray([p[0] for p in pairs], dtype=np.int64))
    pb = np.ascontiguousarray(np.asarray([p[1] for p in pairs], dtype=np.int64))
    if d == 0:
        return 1, np.zeros((1 if fill else 0, 0), dtype=np.int64)
    name = resolve_backend(backend)
    if name == "numba":
        order = np.argsort(np.maximum(pa, pb), kind="stable")
        sa = np.ascontiguousarray(pa[order])
        sb = np.ascontiguousarray(pb[order])
        key = np.maximum(sa, sb) if sa.size else np.empty(0, dtype=np.int64)
        off = np.zeros(d + 1, dtype=np.int64)
        for k in range(d):
            off[k + 1] = off[k] + int((key == k).sum())
        probe = np.empty((0, d), dtype=np.int64)
        count = _scan_numba.scan_lepp_kernel(d, m, sa, sb, off, probe)
        if not fill:
            return count, probe
        out = np.empty((count, d), dtype=np.int64)
        _scan_numba.scan_lepp_kernel(d, m, sa, sb, off, out)
        return count, out
    return _scan_numpy.scan_lepp(d, m, pa, pb, fill)
