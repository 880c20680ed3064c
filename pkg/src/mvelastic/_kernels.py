"""Numba dynamic-programming kernels for the elastic measures.

Conventions shared by every kernel here:

* univariate kernels take contiguous 1-D float64 arrays; dependent kernels
  take (L, D) float64 arrays and compute ground costs between whole rows;
* ``band`` is an integer warping half-width: cell (i, j) of the alignment
  grid is reachable iff ``|i - j| <= band``; a negative band means no
  constraint (full window);
* cost matrices use the boundary Delta(0,0)=0 with +inf first row/column
  (LCSS instead uses 0 boundaries and a max-recurrence);
* storage is two rolling rows of length L+1, not the full matrix;
* ``fastmath`` stays off: the +inf boundaries rely on IEEE semantics, and
  results must be bit-reproducible across runs and thread counts.

All kernels are compiled ``nogil`` so caller-level thread pools can overlap
distance computations.
"""

import numpy as np
from numba import njit

_JIT = dict(cache=True, nogil=True)


# ---------------------------------------------------------------------------
# Lp


@njit(**_JIT)
def lp_uni(x, y, p):
    s = 0.0
    for i in range(x.shape[0]):
        s += abs(x[i] - y[i]) ** p
    return s ** (1.0 / p)


@njit(**_JIT)
def lp_dep(X, Y, p):
    L, D = X.shape
    s = 0.0
    for i in range(L):
        for d in range(D):
            s += abs(X[i, d] - Y[i, d]) ** p
    return s ** (1.0 / p)


@njit(**_JIT)
def lp_indep(X, Y, p, combine_p):
    D = X.shape[1]
    acc = 0.0
    for d in range(D):
        v = lp_uni(np.ascontiguousarray(X[:, d]), np.ascontiguousarray(Y[:, d]), p)
        acc += abs(v) ** combine_p
    return acc ** (1.0 / combine_p)


# ---------------------------------------------------------------------------
# DTW


@njit(**_JIT)
def dtw_uni(x, y, band):
    n = x.shape[0]
    m = y.shape[0]
    prev = np.full(m + 1, np.inf)
    curr = np.full(m + 1, np.inf)
    prev[0] = 0.0
    for i in range(1, n + 1):
        for j in range(m + 1):
            curr[j] = np.inf
        if band < 0:
            lo, hi = 1, m
        else:
            lo = i - band if i - band > 1 else 1
            hi = i + band if i + band < m else m
        for j in range(lo, hi + 1):
            d = x[i - 1] - y[j - 1]
            best = prev[j - 1]
            if prev[j] < best:
                best = prev[j]
            if curr[j - 1] < best:
                best = curr[j - 1]
            curr[j] = d * d + best
        prev, curr = curr, prev
    return prev[m]


@njit(**_JIT)
def dtw_dep(X, Y, band):
    n = X.shape[0]
    m = Y.shape[0]
    D = X.shape[1]
    prev = np.full(m + 1, np.inf)
    curr = np.full(m + 1, np.inf)
    prev[0] = 0.0
    for i in range(1, n + 1):
        for j in range(m + 1):
            curr[j] = np.inf
        if band < 0:
            lo, hi = 1, m
        else:
            lo = i - band if i - band > 1 else 1
            hi = i + band if i + band < m else m
        for j in range(lo, hi + 1):
            c = 0.0
            for d in range(D):
                diff = X[i - 1, d] - Y[j - 1, d]
                c += diff * diff
            best = prev[j - 1]
            if prev[j] < best:
                best = prev[j]
            if curr[j - 1] < best:
                best = curr[j - 1]
            curr[j] = c + best
        prev, curr = curr, prev
    return prev[m]


@njit(**_JIT)
def dtw_indep(X, Y, band, combine_p):
    D = X.shape[1]
    acc = 0.0
    for d in range(D):
        v = dtw_uni(np.ascontiguousarray(X[:, d]), np.ascontiguousarray(Y[:, d]), band)
        acc += abs(v) ** combine_p
    return acc ** (1.0 / combine_p)


# ---------------------------------------------------------------------------
# WDTW


@njit(**_JIT)
def wdtw_weights(length, g):
    # weight for a warping distance delta is 1 / (1 + exp(-g * (delta - length) / 2))
    w = np.empty(length + 1)
    for delta in range(length + 1):
        w[delta] = 1.0 / (1.0 + np.exp(-g * ((delta - length) / 2.0)))
    return w


@njit(**_JIT)
def wdtw_uni(x, y, g):
    n = x.shape[0]
    m = y.shape[0]
    longest = n if n >= m else m
    w = wdtw_weights(longest, g)
    prev = np.full(m + 1, np.inf)
    curr = np.full(m + 1, np.inf)
    prev[0] = 0.0
    for i in range(1, n + 1):
        curr[0] = np.inf
        for j in range(1, m + 1):
            d = x[i - 1] - y[j - 1]
            best = prev[j - 1]
            if prev[j] < best:
                best = prev[j]
            if curr[j - 1] < best:
                best = curr[j - 1]
            curr[j] = w[abs(i - j)] * d * d + best
        prev, curr = curr, prev
    return prev[m]


@njit(**_JIT)
def wdtw_dep(X, Y, g):
    n = X.shape[0]
    m = Y.shape[0]
    D = X.shape[1]
    longest = n if n >= m else m
    w = wdtw_weights(longest, g)
    prev = np.full(m + 1, np.inf)
    curr = np.full(m + 1, np.inf)
    prev[0] = 0.0
    for i in range(1, n + 1):
        curr[0] = np.inf
        for j in range(1, m + 1):
            c = 0.0
            for d in range(D):
                diff = X[i - 1, d] - Y[j - 1, d]
                c += diff * diff
            best = prev[j - 1]
            if prev[j] < best:
                best = prev[j]
            if curr[j - 1] < best:
                best = curr[j - 1]
            curr[j] = w[abs(i - j)] * c + best
        prev, curr = curr, prev
    return prev[m]


@njit(**_JIT)
def wdtw_indep(X, Y, g, combine_p):
    D = X.shape[1]
    acc = 0.0
    for d in range(D):
        v = wdtw_uni(np.ascontiguousarray(X[:, d]), np.ascontiguousarray(Y[:, d]), g)
        acc += abs(v) ** combine_p
    return acc ** (1.0 / combine_p)


# ---------------------------------------------------------------------------
# LCSS
#
# The match test is band-constrained but the max-recurrence propagates over
# the whole grid, so counts survive stretches with no in-band matches.
# Kernels return the unnormalized match count; callers turn it into the
# distance 1 - count / L.


@njit(**_JIT)
def lcss_uni(x, y, epsilon, band):
    n = x.shape[0]
    m = y.shape[0]
    prev = np.zeros(m + 1)
    curr = np.zeros(m + 1)
    for i in range(1, n + 1):
        curr[0] = 0.0
        for j in range(1, m + 1):
            if (band < 0 or abs(i - j) <= band) and abs(x[i - 1] - y[j - 1]) <= epsilon:
                curr[j] = prev[j - 1] + 1.0
            else:
                a = prev[j]
                b = curr[j - 1]
                curr[j] = a if a >= b else b
        prev, curr = curr, prev
    return prev[m]


@njit(**_JIT)
def lcss_dep(X, Y, epsilon, band):
    n = X.shape[0]
    m = Y.shape[0]
    D = X.shape[1]
    prev = np.zeros(m + 1)
    curr = np.zeros(m + 1)
    for i in range(1, n + 1):
        curr[0] = 0.0
        for j in range(1, m + 1):
            matched = False
            if band < 0 or abs(i - j) <= band:
                sq = 0.0
                for d in range(D):
                    diff = X[i - 1, d] - Y[j - 1, d]
                    sq += diff * diff
                matched = sq <= epsilon
            if matched:
                curr[j] = prev[j - 1] + 1.0
            else:
                a = prev[j]
                b = curr[j - 1]
                curr[j] = a if a >= b else b
        prev, curr = curr, prev
    return prev[m]


@njit(**_JIT)
def lcss_indep(X, Y, epsilons, band, combine_p):
    # epsilons holds one match threshold per dimension
    L, D = X.shape
    acc = 0.0
    for d in range(D):
        count = lcss_uni(
            np.ascontiguousarray(X[:, d]), np.ascontiguousarray(Y[:, d]),
            epsilons[d], band,
        )
        v = 1.0 - count / L
        acc += abs(v) ** combine_p
    return acc ** (1.0 / combine_p)


# ---------------------------------------------------------------------------
# ERP


@njit(**_JIT)
def erp_uni(x, y, g, band):
    n = x.shape[0]
    m = y.shape[0]
    prev = np.full(m + 1, np.inf)
    curr = np.full(m + 1, np.inf)
    prev[0] = 0.0
    for i in range(1, n + 1):
        for j in range(m + 1):
            curr[j] = np.inf
        if band < 0:
            lo, hi = 1, m
        else:
            lo = i - band if i - band > 1 else 1
            hi = i + band if i + band < m else m
        for j in range(lo, hi + 1):
            dd = x[i - 1] - y[j - 1]
            dg_i = x[i - 1] - g
            dg_j = y[j - 1] - g
            best = prev[j - 1] + dd * dd
            cand = prev[j] + dg_i * dg_i
            if cand < best:
                best = cand
            cand = curr[j - 1] + dg_j * dg_j
            if cand < best:
                best = cand
            curr[j] = best
        prev, curr = curr, prev
    return prev[m]


@njit(**_JIT)
def erp_dep(X, Y, gvec, band):
    n = X.shape[0]
    m = Y.shape[0]
    D = X.shape[1]
    prev = np.full(m + 1, np.inf)
    curr = np.full(m + 1, np.inf)
    prev[0] = 0.0
    for i in range(1, n + 1):
        for j in range(m + 1):
            curr[j] = np.inf
        if band < 0:
            lo, hi = 1, m
        else:
            lo = i - band if i - band > 1 else 1
            hi = i + band if i + band < m else m
        for j in range(lo, hi + 1):
            cd = 0.0
            ci = 0.0
            cj = 0.0
            for d in range(D):
                diff = X[i - 1, d] - Y[j - 1, d]
                cd += diff * diff
                diff = X[i - 1, d] - gvec[d]
                ci += diff * diff
                diff = Y[j - 1, d] - gvec[d]
                cj += diff * diff
            best = prev[j - 1] + cd
            cand = prev[j] + ci
            if cand < best:
                best = cand
            cand = curr[j - 1] + cj
            if cand < best:
                best = cand
            curr[j] = best
        prev, curr = curr, prev
    return prev[m]


@njit(**_JIT)
def erp_indep(X, Y, gvec, band, combine_p):
    # gvec holds one gap reference value per dimension
    D = X.shape[1]
    acc = 0.0
    for d in range(D):
        v = erp_uni(
            np.ascontiguousarray(X[:, d]), np.ascontiguousarray(Y[:, d]),
            gvec[d], band,
        )
        acc += abs(v) ** combine_p
    return acc ** (1.0 / combine_p)


# ---------------------------------------------------------------------------
# MSM


@njit(**_JIT)
def msm_cost_uni(new, x, y, c):
    if (x <= new and new <= y) or (x >= new and new >= y):
        return c
    d1 = abs(new - x)
    d2 = abs(new - y)
    return c + (d1 if d1 < d2 else d2)


@njit(**_JIT)
def msm_cost_dep(new, x, y, c):
    # split/merge cost is c when `new` lies inside the hypersphere whose
    # diameter joins x and y, else c plus the distance to the nearer of the two
    D = new.shape[0]
    diam_sq = 0.0
    mid_sq = 0.0
    dx_sq = 0.0
    dy_sq = 0.0
    for d in range(D):
        ab = x[d] - y[d]
        diam_sq += ab * ab
        mid = (x[d] + y[d]) / 2.0 - new[d]
        mid_sq += mid * mid
        dx = new[d] - x[d]
        dx_sq += dx * dx
        dy = new[d] - y[d]
        dy_sq += dy * dy
    if np.sqrt(mid_sq) <= np.sqrt(diam_sq) / 2.0:
        return c
    d1 = np.sqrt(dx_sq)
    d2 = np.sqrt(dy_sq)
    return c + (d1 if d1 < d2 else d2)


@njit(**_JIT)
def msm_uni(x, y, c):
    n = x.shape[0]
    m = y.shape[0]
    prev = np.full(m + 1, np.inf)
    curr = np.full(m + 1, np.inf)
    prev[0] = 0.0
    for i in range(1, n + 1):
        curr[0] = np.inf
        for j in range(1, m + 1):
            best = prev[j - 1] + abs(x[i - 1] - y[j - 1])
            if i >= 2:
                cand = prev[j] + msm_cost_uni(x[i - 1], x[i - 2], y[j - 1], c)
                if cand < best:
                    best = cand
            if j >= 2:
                cand = curr[j - 1] + msm_cost_uni(y[j - 1], x[i - 1], y[j - 2], c)
                if cand < best:
                    best = cand
            curr[j] = best
        prev, curr = curr, prev
    return prev[m]


@njit(**_JIT)
def msm_dep(X, Y, c):
    n = X.shape[0]
    m = Y.shape[0]
    D = X.shape[1]
    prev = np.full(m + 1, np.inf)
    curr = np.full(m + 1, np.inf)
    prev[0] = 0.0
    for i in range(1, n + 1):
        curr[0] = np.inf
        for j in range(1, m + 1):
            move = 0.0
            for d in range(D):
                diff = X[i - 1, d] - Y[j - 1, d]
                move += diff * diff
            best = prev[j - 1] + move
            if i >= 2:
                cand = prev[j] + msm_cost_dep(X[i - 1], X[i - 2], Y[j - 1], c)
                if cand < best:
                    best = cand
            if j >= 2:
                cand = curr[j - 1] + msm_cost_dep(Y[j - 1], X[i - 1], Y[j - 2], c)
                if cand < best:
                    best = cand
            curr[j] = best
        prev, curr = curr, prev
    return prev[m]


@njit(**_JIT)
def msm_indep(X, Y, c, combine_p):
    D = X.shape[1]
    acc = 0.0
    for d in range(D):
        v = msm_uni(np.ascontiguousarray(X[:, d]), np.ascontiguousarray(Y[:, d]), c)
        acc += abs(v) ** combine_p
    return acc ** (1.0 / combine_p)


# ---------------------------------------------------------------------------
# TWE
#
# Both series carry an implicit all-zero point at index 0 so the costs that
# reference q_{i-1}, c_{j-1} are defined on the first row and column.


@njit(**_JIT)
def twe_uni(x, y, nu, lam):
    n = x.shape[0]
    m = y.shape[0]
    prev = np.full(m + 1, np.inf)
    curr = np.full(m + 1, np.inf)
    prev[0] = 0.0
    for i in range(1, n + 1):
        curr[0] = np.inf
        xi = x[i - 1]
        xprev = x[i - 2] if i >= 2 else 0.0
        for j in range(1, m + 1):
            yj = y[j - 1]
            yprev = y[j - 2] if j >= 2 else 0.0
            d1 = xi - yj
            d2 = xprev - yprev
            best = prev[j - 1] + d1 * d1 + d2 * d2 + 2.0 * nu
            da = xi - xprev
            cand = prev[j] + da * da + nu + lam
            if cand < best:
                best = cand
            db = yj - yprev
            cand = curr[j - 1] + db * db + nu + lam
            if cand < best:
                best = cand
            curr[j] = best
        prev, curr = curr, prev
    return prev[m]


@njit(**_JIT)
def twe_dep(X, Y, nu, lam):
    n = X.shape[0]
    m = Y.shape[0]
    D = X.shape[1]
    prev = np.full(m + 1, np.inf)
    curr = np.full(m + 1, np.inf)
    prev[0] = 0.0
    for i in range(1, n + 1):
        curr[0] = np.inf
        for j in range(1, m + 1):
            match = 0.0
            del_a = 0.0
            del_b = 0.0
            for d in range(D):
                xi = X[i - 1, d]
                xprev = X[i - 2, d] if i >= 2 else 0.0
                yj = Y[j - 1, d]
                yprev = Y[j - 2, d] if j >= 2 else 0.0
                diff = xi - yj
                match += diff * diff
                diff = xprev - yprev
                match += diff * diff
                diff = xi - xprev
                del_a += diff * diff
                diff = yj - yprev
                del_b += diff * diff
            best = prev[j - 1] + match + 2.0 * nu
            cand = prev[j] + del_a + nu + lam
            if cand < best:
                best = cand
            cand = curr[j - 1] + del_b + nu + lam
            if cand < best:
                best = cand
            curr[j] = best
        prev, curr = curr, prev
    return prev[m]


@njit(**_JIT)
def twe_indep(X, Y, nu, lam, combine_p):
    D = X.shape[1]
    acc = 0.0
    for d in range(D):
        v = twe_uni(np.ascontiguousarray(X[:, d]), np.ascontiguousarray(Y[:, d]), nu, lam)
        acc += abs(v) ** combine_p
    return acc ** (1.0 / combine_p)
