"""Time the numba kernels against the numpy fallbacks.

    python benchmarks/bench_kernels.py [--repeat 3]

Runs the Betti-number scan (face table + homology over F_p), the Apéry
table and the Hilbert series division for a few larger semigroups, checks
that both backends agree, and prints a table of timings.
"""

import argparse
import time
import warnings

import numpy as np

from repunit_resolution import encomplex as en
from repunit_resolution import oracle
from repunit_resolution.kernels import numba_impl, numpy_impl
from repunit_resolution.semigroup import construct

CASES = [(3, 5, 8), (2, 6, 5), (3, 6, 5), (2, 7, 3)]


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t0)
    return min(times), out


def agree(x, y):
    if isinstance(x, list):
        return all(agree(a, b) for a, b in zip(x, y))
    return np.array_equal(np.asarray(x, dtype=np.int64), np.asarray(y, dtype=np.int64))


def bench_case(params, repeat):
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        S = construct(*params)
    gc = en.build_resolution(S)
    bound = oracle.scan_bound(S, gc)
    m = S.multiplicity
    gens = np.asarray(S.generators, dtype=np.int64)
    inf = m * max(S.generators) + 1
    apery = np.asarray(S.apery_set(), dtype=np.int64)
    sums = np.asarray(S.subset_sums, dtype=np.int64)
    T = S.frobenius() + max(max(s) for s in gc.level_shifts) + 1
    series = np.zeros(T + 1, dtype=np.int64)
    series[0] = 1

    # residues, scanned degrees, series length
    sizes = {"apery": m, "betti scan": bound, "series": T + 1}
    rows = []
    for name, run in [
        ("apery", lambda impl: impl.apery_table(gens, m, inf)),
        ("betti scan", lambda impl: impl.betti_scan(
            impl.divisor_faces(apery, m, sums, 1, bound), S.n, oracle.DEFAULT_PRIME)),
        ("series", lambda impl: [impl.divide_one_minus_tpow(series, int(g)) for g in gens]),
    ]:
        run(numba_impl)  # compile outside the timing
        t_nb, out_nb = best_of(lambda: run(numba_impl), repeat)
        t_np, out_np = best_of(lambda: run(numpy_impl), repeat)
        rows.append((params, name, sizes[name], t_nb, t_np, agree(out_nb, out_np)))
    return rows


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    print(f"{'(b, n, a)':>12} {'kernel':>11} {'size':>7} {'numba s':>9} {'numpy s':>9} "
          f"{'speedup':>8} agree")
    for params in CASES:
        for p, name, size, t_nb, t_np, same in bench_case(params, args.repeat):
            print(f"{str(p):>12} {name:>11} {size:>7} {t_nb:9.4f} {t_np:9.4f} "
                  f"{t_np / max(t_nb, 1e-9):8.1f} {same}")


if __name__ == "__main__":
    main()
