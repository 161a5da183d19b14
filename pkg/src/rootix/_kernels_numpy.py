"""Pure-numpy kernel implementations (the no-compilation fallback).

Contracts shared with ``_kernels_numba``:

all_pairs_dist(indptr, nbrs, n)
    CSR adjacency -> (n, n) int16 matrix of hop counts, -1 for unreachable.

distance_weight_counts(dist, degs)
    -> (3, kmax+1) int64 array; row 0 counts unordered pairs at distance k,
    row 1 sums deg(a)+deg(b) over those pairs, row 2 sums deg(a)*deg(b).
    Column 0 is unused (pairs at distance 0 do not exist).

bisect_root_batch(coeffs)
    coeffs is (rows, width) float64, row r holding c_1..c_d of a polynomial
    Q(x) = sum c_k x^k (zero-padded on the right).  Solves Q(x) = 1 on (0, 1]
    by 44 bisection steps followed by up to 3 Newton steps that are kept only
    while they stay inside the certified bracket.  Returns (rows, 3) float64
    with columns (root, bracket_lo, bracket_hi).

The numba twin performs the identical operation sequence element by element,
so both backends return bit-identical floats.
"""

from __future__ import annotations

import numpy as np

BISECT_STEPS = 44  # final bracket width 2**-44 < 1e-13
NEWTON_STEPS = 3


def all_pairs_dist(indptr, nbrs, n):
    dist = np.full((n, n), -1, np.int16)
    np.fill_diagonal(dist, 0)
    if len(nbrs) == 0:
        return dist
    adj = np.zeros((n, n), np.float32)
    src = np.repeat(np.arange(n), np.diff(indptr))
    adj[src, nbrs] = 1.0
    reached = np.eye(n, dtype=bool)
    frontier = reached.copy()
    d = 0
    while frontier.any():
        d += 1
        frontier = ((frontier.astype(np.float32) @ adj) > 0) & ~reached
        dist[frontier] = d
        reached |= frontier
    return dist


def distance_weight_counts(dist, degs):
    n = dist.shape[0]
    iu, ju = np.triu_indices(n, 1)
    ks = dist[iu, ju].astype(np.int64)
    kmax = int(ks.max()) if len(ks) else 0
    if kmax <= 0:
        return np.zeros((3, max(kmax, 0) + 1), np.int64)
    pos = ks > 0
    ks = ks[pos]
    da = degs[iu[pos]]
    db = degs[ju[pos]]
    out = np.zeros((3, kmax + 1), np.int64)
    out[0] = np.bincount(ks, minlength=kmax + 1)
    out[1] = np.bincount(ks, weights=(da + db).astype(np.float64), minlength=kmax + 1)
    out[2] = np.bincount(ks, weights=(da * db).astype(np.float64), minlength=kmax + 1)
    return out


def _horner(coeffs, x):
    p = np.zeros_like(x)
    for k in range(coeffs.shape[1] - 1, -1, -1):
        p = p * x + coeffs[:, k]
    return p


def bisect_root_batch(coeffs):
    coeffs = np.asarray(coeffs, np.float64)
    rows = coeffs.shape[0]
    lo = np.zeros(rows)
    hi = np.ones(rows)
    for _ in range(BISECT_STEPS):
        mid = 0.5 * (lo + hi)
        q = _horner(coeffs, mid) * mid
        above = q >= 1.0
        hi = np.where(above, mid, hi)
        lo = np.where(above, lo, mid)
    x = 0.5 * (lo + hi)
    alive = np.ones(rows, bool)
    for _ in range(NEWTON_STEPS):
        p = np.zeros(rows)
        dp = np.zeros(rows)
        for k in range(coeffs.shape[1] - 1, -1, -1):
            dp = dp * x + p
            p = p * x + coeffs[:, k]
        q = x * p
        dq = p + x * dp
        ok = alive & (dq > 0.0)
        xn = x - (q - 1.0) / np.where(ok, dq, 1.0)
        ok &= (xn >= lo) & (xn <= hi)
        x = np.where(ok, xn, x)
        alive = ok
    return np.stack((x, lo, hi), axis=1)
