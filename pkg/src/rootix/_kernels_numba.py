"""Numba-compiled kernels. Same contracts (and bit-identical output) as
``_kernels_numpy``; see that module for the reference semantics."""

from __future__ import annotations

import numpy as np
from numba import njit

BISECT_STEPS = 44  # final bracket width 2**-44 < 1e-13
NEWTON_STEPS = 3


@njit(cache=True)
def all_pairs_dist(indptr, nbrs, n):
    dist = np.full((n, n), -1, np.int16)
    queue = np.empty(n, np.int32)
    for s in range(n):
        row = dist[s]
        row[s] = 0
        queue[0] = s
        head = 0
        tail = 1
        while head < tail:
            u = queue[head]
            head += 1
            du = row[u]
            for k in range(indptr[u], indptr[u + 1]):
                v = nbrs[k]
                if row[v] < 0:
                    row[v] = du + 1
                    queue[tail] = v
                    tail += 1
    return dist


@njit(cache=True)
def distance_weight_counts(dist, degs):
    n = dist.shape[0]
    kmax = 0
    for i in range(n):
        for j in range(i + 1, n):
            if dist[i, j] > kmax:
                kmax = dist[i, j]
    out = np.zeros((3, kmax + 1), np.int64)
    for i in range(n):
        di = degs[i]
        for j in range(i + 1, n):
            k = dist[i, j]
            if k > 0:
                dj = degs[j]
                out[0, k] += 1
                out[1, k] += di + dj
                out[2, k] += di * dj
    return out


@njit(cache=True)
def bisect_root_batch(coeffs):
    rows, width = coeffs.shape
    out = np.empty((rows, 3), np.float64)
    for r in range(rows):
        lo = 0.0
        hi = 1.0
        for _ in range(BISECT_STEPS):
            mid = 0.5 * (lo + hi)
            q = 0.0
            for k in range(width - 1, -1, -1):
                q = q * mid + coeffs[r, k]
            q *= mid
            if q >= 1.0:
                hi = mid
            else:
                lo = mid
        x = 0.5 * (lo + hi)
        for _ in range(NEWTON_STEPS):
            p = 0.0
            dp = 0.0
            for k in range(width - 1, -1, -1):
                dp = dp * x + p
                p = p * x + coeffs[r, k]
            q = x * p
            dq = p + x * dp
            if dq <= 0.0:
                break
            xn = x - (q - 1.0) / dq
            if xn < lo or xn > hi:
                break
            x = xn
        out[r, 0] = x
        out[r, 1] = lo
        out[r, 2] = hi
    return out
