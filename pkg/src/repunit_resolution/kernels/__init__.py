"""Numeric kernels with a numba fast path and a numpy fallback.

The backend is chosen once at import time.  Set ``REPUNIT_NO_NUMBA=1`` to
force the numpy versions; they are also used automatically when numba is not
installed.  Values that do not fit comfortably in int64 are always routed to
the numpy versions, which then run on exact Python integers.
"""

import os

import numpy as np

from . import numpy_impl

INT64_SAFE = 2**62

try:
    if os.environ.get("REPUNIT_NO_NUMBA", "").strip() not in ("", "0"):
        raise ImportError("numba disabled by REPUNIT_NO_NUMBA")
    from . import numba_impl
except ImportError:
    numba_impl = None

BACKEND = "numba" if numba_impl is not None else "numpy"
_impl = numba_impl if numba_impl is not None else numpy_impl


def apery_table(gens, m):
    """Least element of the semigroup generated by ``gens`` per residue mod ``m``.

    Unreachable residues are reported as ``-1``.
    """
    gens = [int(g) for g in gens]
    inf = m * max(gens) + 1
    if inf < INT64_SAFE and _impl is numba_impl:
        w = numba_impl.apery_table(np.asarray(gens, dtype=np.int64), m, inf)
    else:
        w = numpy_impl.apery_table(gens, m, inf)
    return [int(x) if x < inf else -1 for x in w]


def divisor_faces(apery, m, subset_sums, s_lo, s_hi):
    apery = np.asarray(apery, dtype=np.int64)
    sums = np.asarray(subset_sums, dtype=np.int64)
    return _impl.divisor_faces(apery, m, sums, s_lo, s_hi)


def member_mask(apery, m, values):
    return _impl.member_mask(np.asarray(apery, dtype=np.int64), m,
                             np.asarray(values, dtype=np.int64))


def rank_mod_p(mat, p):
    mat = np.asarray(mat, dtype=np.int64)
    if mat.size == 0:
        return 0
    return int(_impl.rank_mod_p(mat, p))


def reduced_homology(face_row, n, p):
    return _impl.reduced_homology(np.asarray(face_row, dtype=np.uint8), n, p)


def betti_scan(faces, n, p):
    return _impl.betti_scan(np.ascontiguousarray(faces, dtype=np.uint8), n, p)


def divide_one_minus_tpow(coeffs, a):
    if coeffs.dtype == object or _impl is numpy_impl:
        return numpy_impl.divide_one_minus_tpow(coeffs, a)
    return numba_impl.divide_one_minus_tpow(coeffs, a)
