import os
import subprocess
import sys

import numpy as np
import pytest
from sympy import GF
from sympy.polys.matrices import DomainMatrix

from repunit_resolution import kernels
from repunit_resolution.kernels import numpy_impl

from conftest import apery_by_search

numba_impl = pytest.importorskip("repunit_resolution.kernels.numba_impl")

IMPLS = [numpy_impl, numba_impl]


def sympy_rank(mat, p):
    K = GF(p)
    rows = [[K(int(v)) for v in r] for r in mat]
    return DomainMatrix(rows, mat.shape, K).rank() if mat.size else 0


@pytest.mark.parametrize("impl", IMPLS, ids=["numpy", "numba"])
@pytest.mark.parametrize("p", [2, 3, 32003])
def test_rank_against_sympy(impl, p):
    rng = np.random.default_rng(p)
    for _ in range(40):
        r, c = rng.integers(1, 9, size=2)
        k = int(rng.integers(1, min(r, c) + 1))
        mat = rng.integers(-5, 6, size=(r, k)) @ rng.integers(-5, 6, size=(k, c))
        assert impl.rank_mod_p(mat.astype(np.int64), p) == sympy_rank(mat, p)


@pytest.mark.parametrize("impl", IMPLS, ids=["numpy", "numba"])
def test_apery(impl):
    for gens, m in [([7, 10, 16], 7), ([7, 10, 16], 10), ([3, 8], 3), ([40, 43, 52, 88], 43)]:
        inf = m * max(gens) + 1
        got = impl.apery_table(np.asarray(gens, dtype=np.int64), m, inf)
        assert [int(v) for v in got] == apery_by_search(gens, m)


def test_apery_big_integers_fall_back_to_objects():
    big = 2**70 + 2  # congruent to 1 mod 5
    got = kernels.apery_table([5, big], 5)
    assert got == [k * big for k in range(5)]


def _random_complex(rng, n):
    tops = rng.choice(1 << n, size=int(rng.integers(1, 6)))
    row = np.zeros(1 << n, dtype=np.uint8)
    for f in range(1 << n):
        if any(f & t == f for t in tops):
            row[f] = 1
    return row


def test_backends_agree_on_homology():
    rng = np.random.default_rng(7)
    for _ in range(100):
        n = int(rng.integers(1, 7))
        row = _random_complex(rng, n)
        if rng.random() < 0.1:
            row[:] = 0
        a = numpy_impl.reduced_homology(row, n, 32003)
        b = numba_impl.reduced_homology(row, n, 32003)
        assert list(a) == list(b)


def test_backends_agree_on_faces_and_scan():
    gens = [40, 41, 44, 53]
    apery = numba_impl.apery_table(np.asarray(gens, dtype=np.int64), 40, 40 * 53 + 1)
    sums = np.array([sum(g for i, g in enumerate(gens) if f >> i & 1) for f in range(16)],
                    dtype=np.int64)
    fa = numpy_impl.divisor_faces(apery, 40, sums, 1, 700)
    fb = numba_impl.divisor_faces(apery, 40, sums, 1, 700)
    assert np.array_equal(fa, fb)
    assert np.array_equal(numpy_impl.betti_scan(fa, 4, 32003), numba_impl.betti_scan(fb, 4, 32003))


@pytest.mark.parametrize("a", [1, 3, 7, 50])
def test_series_division(a):
    rng = np.random.default_rng(a)
    c = rng.integers(-3, 4, size=40).astype(np.int64)
    got_np = numpy_impl.divide_one_minus_tpow(c, a)
    got_nb = numba_impl.divide_one_minus_tpow(c, a)
    # multiplying back by (1 - t^a) must recover the input
    back = got_np.copy()
    back[a:] -= got_np[:-a] if a < len(c) else 0
    assert np.array_equal(back, c)
    assert np.array_equal(got_np, got_nb)
    obj = numpy_impl.divide_one_minus_tpow(c.astype(object), a)
    assert [int(v) for v in obj] == [int(v) for v in got_np]


def test_member_mask_backends():
    apery = np.array([0, 36, 16, 10, 32, 26, 20], dtype=np.int64)
    vals = np.arange(-3, 60, dtype=np.int64)
    a = numpy_impl.member_mask(apery, 7, vals)
    b = numba_impl.member_mask(apery, 7, vals)
    assert np.array_equal(a, b)
    assert not a[0] and a[3]


def test_env_flag_selects_numpy():
    env = dict(os.environ, REPUNIT_NO_NUMBA="1")
    out = subprocess.run(
        [sys.executable, "-c",
         "from repunit_resolution import kernels; print(kernels.BACKEND)"],
        env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "numpy"


def test_numpy_backend_end_to_end():
    env = dict(os.environ, REPUNIT_NO_NUMBA="1")
    out = subprocess.run(
        [sys.executable, "-m", "repunit_resolution", "verify", "--b", "3", "--n", "4", "--a", "1"],
        env=env, capture_output=True, text=True)
    assert out.returncode == 0, out.stdout + out.stderr
    assert "8/8 PASS" in out.stdout
