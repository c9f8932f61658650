"""Pure-numpy versions of the numeric kernels.

Every function here mirrors one in :mod:`numba_impl` with the same signature
and the same result.  Arrays of ``dtype=object`` are accepted where noted so
that large semigroups fall back to exact Python integers.
"""

import numpy as np


def apery_table(gens, m, inf):
    """Least element of ``<gens>`` in each residue class modulo ``m``.

    Classes that are never reached keep the value ``inf``.  Uses repeated
    vectorised relaxation ``w[r + g] <- w[r] + g`` until nothing changes.
    """
    dtype = object if isinstance(inf, int) and inf >= 2**62 else np.int64
    w = np.full(m, inf, dtype=dtype)
    w[0] = 0
    steps = [(int(g) % m, int(g)) for g in gens if int(g) % m]
    changed = True
    while changed:
        changed = False
        for shift, g in steps:
            rolled = np.roll(w, shift)
            cand = np.where(rolled >= inf, inf, rolled + g)
            new = np.minimum(w, cand)
            if np.any(new != w):
                changed = True
                w = new
    return w


def member_mask(apery, m, values):
    values = np.asarray(values, dtype=np.int64)
    out = np.zeros(values.shape, dtype=np.bool_)
    ok = values >= 0
    v = values[ok]
    out[ok] = apery[v % m] <= v
    return out


def divisor_faces(apery, m, subset_sums, s_lo, s_hi):
    """Face indicators of the squarefree divisor complexes for s in [s_lo, s_hi].

    Row ``s - s_lo``, column ``F`` (a bitmask over generators) is 1 iff
    ``s - subset_sums[F]`` lies in the semigroup.
    """
    s = np.arange(s_lo, s_hi + 1, dtype=np.int64)
    x = s[:, None] - np.asarray(subset_sums, dtype=np.int64)[None, :]
    return member_mask(apery, m, x).astype(np.uint8)


def rank_mod_p(mat, p):
    """Rank of an integer matrix over F_p by row reduction."""
    a = np.array(mat, dtype=np.int64) % p
    rows, cols = a.shape
    rank = 0
    for col in range(cols):
        if rank == rows:
            break
        nz = np.nonzero(a[rank:, col])[0]
        if nz.size == 0:
            continue
        piv = rank + nz[0]
        if piv != rank:
            a[[rank, piv]] = a[[piv, rank]]
        inv = pow(int(a[rank, col]), p - 2, p)
        a[rank] = (a[rank] * inv) % p
        below = a[rank + 1:, col].copy()
        if below.any():
            a[rank + 1:] = (a[rank + 1:] - below[:, None] * a[rank][None, :]) % p
        rank += 1
    return rank


def _boundary(faces_hi, faces_lo_index, n):
    rows = len(faces_lo_index)
    mat = np.zeros((rows, len(faces_hi)), dtype=np.int64)
    for col, f in enumerate(faces_hi):
        sign = 1
        for v in range(n):
            if f >> v & 1:
                mat[faces_lo_index[f ^ (1 << v)], col] = sign
                sign = -sign
    return mat


def reduced_homology(face_row, n, p):
    """Reduced homology dimensions in degrees -1..n-1 of one complex.

    ``face_row`` is the 0/1 indicator over all 2**n vertex subsets.
    """
    out = np.zeros(n + 1, dtype=np.int64)
    if not face_row[0]:
        return out
    by_size = [[] for _ in range(n + 1)]
    for f in np.flatnonzero(face_row):
        by_size[int(f).bit_count()].append(int(f))
    index = [{f: i for i, f in enumerate(fs)} for fs in by_size]
    ranks = [0] * (n + 2)
    for size in range(1, n + 1):
        if by_size[size]:
            ranks[size] = rank_mod_p(_boundary(by_size[size], index[size - 1], n), p)
    for size in range(n + 1):
        out[size] = len(by_size[size]) - ranks[size] - ranks[size + 1]
    return out


def betti_scan(faces, n, p):
    out = np.zeros((faces.shape[0], n + 1), dtype=np.int64)
    for row in range(faces.shape[0]):
        out[row] = reduced_homology(faces[row], n, p)
    return out


def divide_one_minus_tpow(coeffs, a):
    """Truncated series division by ``1 - t**a`` (strided prefix sums)."""
    c = np.array(coeffs, copy=True)
    length = c.shape[0]
    if a >= length:
        return c
    pad = (-length) % a
    padded = np.concatenate([c, np.zeros(pad, dtype=c.dtype)])
    return np.cumsum(padded.reshape(-1, a), axis=0).reshape(-1)[:length]
