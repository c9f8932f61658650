"""``@njit`` versions of the numeric kernels (int64 only)."""

import numpy as np
from numba import njit


@njit(cache=True)
def apery_table(gens, m, inf):
    # round-robin: one pass per residue cycle, started at the cycle minimum
    w = np.full(m, inf, dtype=np.int64)
    w[0] = 0
    for gi in range(gens.shape[0]):
        g = gens[gi]
        r = g % m
        if r == 0:
            continue
        a, b = r, m
        while b:
            a, b = b, a % b
        d = a
        length = m // d
        for start in range(d):
            best = start
            cur = start
            for _ in range(length):
                cur = (cur + r) % m
                if w[cur] < w[best]:
                    best = cur
            if w[best] >= inf:
                continue
            cur = best
            for _ in range(length - 1):
                nxt = (cur + r) % m
                cand = w[cur] + g
                if cand < w[nxt]:
                    w[nxt] = cand
                cur = nxt
    return w


@njit(cache=True)
def member_mask(apery, m, values):
    out = np.zeros(values.shape[0], dtype=np.bool_)
    for i in range(values.shape[0]):
        v = values[i]
        out[i] = v >= 0 and apery[v % m] <= v
    return out


@njit(cache=True)
def divisor_faces(apery, m, subset_sums, s_lo, s_hi):
    count = s_hi - s_lo + 1
    k = subset_sums.shape[0]
    out = np.zeros((count, k), dtype=np.uint8)
    for row in range(count):
        s = s_lo + row
        for f in range(k):
            x = s - subset_sums[f]
            if x >= 0 and apery[x % m] <= x:
                out[row, f] = 1
    return out


@njit(cache=True)
def _inv_mod(x, p):
    t, new_t, r, new_r = 0, 1, p, x
    while new_r:
        q = r // new_r
        t, new_t = new_t, t - q * new_t
        r, new_r = new_r, r - q * new_r
    return t % p


@njit(cache=True)
def rank_mod_p(mat, p):
    rows, cols = mat.shape
    a = np.empty((rows, cols), dtype=np.int64)
    for i in range(rows):
        for j in range(cols):
            a[i, j] = mat[i, j] % p
    rank = 0
    for col in range(cols):
        if rank == rows:
            break
        piv = -1
        for i in range(rank, rows):
            if a[i, col] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != rank:
            for j in range(cols):
                tmp = a[rank, j]
                a[rank, j] = a[piv, j]
                a[piv, j] = tmp
        inv = _inv_mod(a[rank, col], p)
        for j in range(col, cols):
            a[rank, j] = a[rank, j] * inv % p
        for i in range(rank + 1, rows):
            f = a[i, col]
            if f:
                for j in range(col, cols):
                    a[i, j] = (a[i, j] - f * a[rank, j]) % p
        rank += 1
    return rank


@njit(cache=True)
def _popcount(x):
    c = 0
    while x:
        x &= x - 1
        c += 1
    return c


@njit(cache=True)
def reduced_homology(face_row, n, p):
    out = np.zeros(n + 1, dtype=np.int64)
    if face_row[0] == 0:
        return out
    k = face_row.shape[0]
    sizes = np.zeros(k, dtype=np.int64)
    pos = np.full(k, -1, dtype=np.int64)
    counts = np.zeros(n + 1, dtype=np.int64)
    for f in range(k):
        if face_row[f]:
            s = _popcount(f)
            sizes[f] = s
            pos[f] = counts[s]
            counts[s] += 1
    ranks = np.zeros(n + 2, dtype=np.int64)
    for size in range(1, n + 1):
        if counts[size] == 0:
            continue
        mat = np.zeros((counts[size - 1], counts[size]), dtype=np.int64)
        for f in range(k):
            if face_row[f] and sizes[f] == size:
                sign = 1
                for v in range(n):
                    if (f >> v) & 1:
                        mat[pos[f ^ (1 << v)], pos[f]] = sign
                        sign = -sign
        ranks[size] = rank_mod_p(mat, p)
    for size in range(n + 1):
        out[size] = counts[size] - ranks[size] - ranks[size + 1]
    return out


@njit(cache=True)
def betti_scan(faces, n, p):
    out = np.zeros((faces.shape[0], n + 1), dtype=np.int64)
    for row in range(faces.shape[0]):
        out[row] = reduced_homology(faces[row], n, p)
    return out


@njit(cache=True)
def divide_one_minus_tpow(coeffs, a):
    c = coeffs.copy()
    for k in range(a, c.shape[0]):
        c[k] += c[k - a]
    return c
