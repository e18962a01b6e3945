"""Box-scan kernels compiled with numba.

Both kernels walk the integer box in odometer order (first coordinate
slowest) with per-prefix pruning, count every solution, and write the first
out.shape[0] of them into out; calling once with an empty buffer counts,
and a second call with an exact buffer fills it.
"""

import numpy as np
from numba import njit


@njit(cache=True)
def scan_linear_kernel(d, lo, hi, A, b, B, c, out):
    """Count integer points of [lo, hi]^d with A x <= b and B |x| <= c.

    Rows of B must be nonnegative, so a partial sum already over c[j] can
    never recover; rows of A are pruned against the best possible
    contribution of the unassigned suffix.
    """
    nA = A.shape[0]
    nB = B.shape[0]
    minrest = np.zeros((nA, d + 1), dtype=np.int64)
    for j in range(nA):
        for k in range(d - 1, -1, -1):
            v1 = A[j, k] * lo
            v2 = A[j, k] * hi
            minrest[j, k] = minrest[j, k + 1] + (v1 if v1 < v2 else v2)
    sumA = np.zeros((d + 1, nA), dtype=np.int64)
    sumB = np.zeros((d + 1, nB), dtype=np.int64)
    x = np.empty(d, dtype=np.int64)
    count = 0
    cap = out.shape[0]
    k = 0
    x[0] = lo
    while k >= 0:
        if x[k] > hi:
            k -= 1
            if k >= 0:
                x[k] += 1
            continue
        xv = x[k]
        axv = -xv if xv < 0 else xv
        feasible = True
        for j in range(nA):
            s = sumA[k, j] + A[j, k] * xv
            sumA[k + 1, j] = s
            if s + minrest[j, k + 1] > b[j]:
                feasible = False
                break
        if feasible:
            for j in range(nB):
                s = sumB[k, j] + B[j, k] * axv
                sumB[k + 1, j] = s
                if s > c[j]:
                    feasible = False
                    break
        if not feasible:
            x[k] += 1
            continue
        if k == d - 1:
            if count < cap:
                for i in range(d):
                    out[count, i] = x[i]
            count += 1
            x[k] += 1
            continue
        k += 1
        x[k] = lo
    return count


@njit(cache=True)
def scan_lepp_kernel(d, m, pa, pb, off, out):
    """Count maps [-m, m]^d whose absolute values weakly increase along the
    listed cover pairs, with ties forced nonnegative on top.

    Pair t constrains coordinates pa[t] < pb[t] in the poset order; pairs
    are grouped so that off[k]..off[k+1] are exactly those whose later
    coordinate (in scan order) is k.
    """
    x = np.empty(d, dtype=np.int64)
    count = 0
    cap = out.shape[0]
    k = 0
    x[0] = -m
    while k >= 0:
        if x[k] > m:
            k -= 1
            if k >= 0:
                x[k] += 1
            continue
        ok = True
        for t in range(off[k], off[k + 1]):
            ha = x[pa[t]]
            hb = x[pb[t]]
            aa = -ha if ha < 0 else ha
            ab = -hb if hb < 0 else hb
            if aa > ab or (aa == ab and hb < 0):
                ok = False
                break
        if not ok:
            x[k] += 1
            continue
        if k == d - 1:
            if count < cap:
                for i in range(d):
                    out[count, i] = x[i]
            count += 1
            x[k] += 1
            continue
        k += 1
        x[k] = -m
    return count
