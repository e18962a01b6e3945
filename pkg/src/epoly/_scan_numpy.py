"""Pure-numpy fallback for the box scans.

Decodes flat indices chunk by chunk and filters with vectorized masks.
Output order matches the compiled kernels: odometer order over the box,
first coordinate slowest.
"""

import numpy as np

CHUNK = 1 << 14


def _decode(flat, d, lo, width):
    coords = np.empty((flat.size, d), dtype=np.int64)
    rem = flat
    for i in range(d - 1, -1, -1):
        coords[:, i] = rem % width + lo
        rem = rem // width
    return coords


def scan_linear(d, lo, hi, A, b, B, c, fill):
    width = hi - lo + 1
    total = width**d
    pieces = []
    count = 0
    for start in range(0, total, CHUNK):
        flat = np.arange(start, min(start + CHUNK, total), dtype=np.int64)
        X = _decode(flat, d, lo, width)
        ok = np.ones(len(flat), dtype=bool)
        if A.shape[0]:
            ok &= (X @ A.T <= b).all(axis=1)
        if B.shape[0]:
            ok &= (np.abs(X) @ B.T <= c).all(axis=1)
        count += int(ok.sum())
        if fill:
            pieces.append(X[ok])
    if fill and pieces:
        return count, np.concatenate(pieces)
    return count, np.empty((0, d), dtype=np.int64)


def scan_lepp(d, m, pa, pb, fill):
    width = 2 * m + 1
    total = width**d
    pieces = []
    count = 0
    for start in range(0, total, CHUNK):
        flat = np.arange(start, min(start + CHUNK, total), dtype=np.int64)
        X = _decode(flat, d, -m, width)
        ok = np.ones(len(flat), dtype=bool)
        if pa.size:
            lower = X[:, pa]
            upper = X[:, pb]
            alow = np.abs(lower)
            aup = np.abs(upper)
            ok &= ((alow < aup) | ((alow == aup) & (upper >= 0))).all(axis=1)
        count += int(ok.sum())
        if fill:
            pieces.append(X[ok])
    if fill and pieces:
        return count, np.concatenate(pieces)
    return count, np.empty((0, d), dtype=np.int64)
