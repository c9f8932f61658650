"""Exit criteria, one test per criterion over the full parameter grid.

Grid: b in {2, 3}, n in {2, 3, 4, 5}, a in {1..8} with gcd(a, a1) = 1.
Every comparison is exact.  Each test records a PASS/FAIL line that is
printed in the terminal summary.
"""

import math
import time
from collections import Counter
from functools import lru_cache

import pytest

from repunit_resolution import encomplex as en
from repunit_resolution import oracle
from repunit_resolution.semigroup import step_identity_holds

from conftest import ACCEPTANCE_LINES, GRID, build
from printed_matrices import example_a1, example_a2

PRIME = 32003
TRIALS = 5


@lru_cache(maxsize=None)
def instance(params):
    S = build(*params)
    t0 = time.perf_counter()
    gc = en.build_resolution(S)
    table = oracle.graded_betti_oracle(S, PRIME, oracle.scan_bound(S, gc))
    return S, gc, table, time.perf_counter() - t0


def record(number, title, failures, extra=f"{len(GRID)} instances"):
    status = "PASS" if not failures else "FAIL"
    detail = extra if not failures else f"{len(failures)} failing: {failures[:4]}"
    ACCEPTANCE_LINES[f"{number:02d}"] = f"[{status}] criterion {number:2d} {title}: {detail}"
    print(ACCEPTANCE_LINES[f"{number:02d}"])
    assert not failures, detail


def test_criterion_01_shift_formula():
    failures, slowest = [], 0.0
    for p in GRID:
        S, gc, table, seconds = instance(p)
        slowest = max(slowest, seconds)
        for j in range(1, S.n):
            if Counter(en.shifts(S, j)) != table.level(j):
                failures.append((p, j))
        if not oracle.compare_with_oracle(gc, table).passed or seconds >= 60:
            failures.append((p, "oracle"))
    record(1, "shift multisets == oracle Betti multisets", failures,
           f"{len(GRID)} instances, slowest {slowest:.2f}s (< 60s)")


def test_criterion_02_betti_counts():
    failures = [(p, j) for p in GRID for j in range(1, p[1])
                if len(en.shifts(instance(p)[0], j)) != j * math.comb(p[1], j + 1)]
    S = build(2, 3, 3)
    if (len(en.shifts(S, 1)), len(en.shifts(S, 2))) != (3, 2):
        failures.append(("n=3 example", "beta != (3, 2)"))
    record(2, "|shifts(S, j)| == j*C(n, j+1)", failures)


def test_criterion_03_complex():
    failures = [p for p in GRID if not en.verify_complex(instance(p)[1]).passed]
    record(3, "delta_{j-1} * delta_j == 0", failures)


def test_criterion_04_homogeneity():
    failures = [p for p in GRID if not en.verify_homogeneity(instance(p)[1]).passed]
    record(4, "entries homogeneous of the shift difference", failures)


def test_criterion_05_minimality():
    failures = [p for p in GRID if not en.verify_minimality(instance(p)[1]).passed]
    record(5, "no constant terms in differentials", failures)


def test_criterion_06_golden_n3():
    S = build(2, 3, 3)
    b, a = 2, 3
    a1, a2, a3 = S.generators
    failures = []
    if not en.signed_permutation_equivalent(en.d1_matrix(S), example_a1(b, a)):
        failures.append("A1")
    if not en.signed_permutation_equivalent(en.dj_matrix(S, 2), example_a2(b, a)):
        failures.append("A2")
    if en.shifts(S, 1) != sorted([(b + 1) * a2, a2 + b * a3, (b + 1) * a3]):
        failures.append("level-1 shifts")
    if en.shifts(S, 2) != sorted([b * a1 + (b + 1) * a3, a2 + (b + 1) * a3]):
        failures.append("level-2 shifts")
    record(6, "n=3 matrices and shifts match the worked example", failures,
           "A1, A2 equal up to signed permutation; shifts {30,42,48}, {58,62}")


def test_criterion_07_pseudo_frobenius():
    failures = []
    for p in GRID:
        S, _, table, _ = instance(p)
        if S.pf_formula() != S.pf_bruteforce():
            failures.append((p, "formula != brute force"))
        if S.frobenius() != (S.n - 1) * S.c + S.a * S.generators[0]:
            failures.append((p, f"F={S.frobenius()} != (n-1)c+a*a1="
                                f"{(S.n - 1) * S.c + S.a * S.generators[0]} (c={S.c})"))
        if oracle.pf_from_table(S, table) != S.pf_bruteforce():
            failures.append((p, "top Betti degrees - sum(a_i) != PF"))
    record(7, "PF formula, Frobenius closed form, top-level degrees", failures)


def test_criterion_08_step_identity():
    failures = [p for p in GRID if not step_identity_holds(instance(p)[0])]
    record(8, "b*a_i == c + a_{i+1}", failures)


def test_criterion_09_hilbert():
    failures = []
    for p in GRID:
        S, gc, _, _ = instance(p)
        T = S.frobenius() + max(max(s) for s in gc.level_shifts) + 1
        if not oracle.hilbert_check(S, gc, T).passed:
            failures.append(p)
    record(9, "Hilbert series identity up to T = F + max shift + 1", failures)


def test_criterion_10_rank_condition():
    failures = [p for p in GRID
                if not oracle.generic_rank_check(instance(p)[1], PRIME, TRIALS).passed]
    record(10, f"r_j + r_(j+1) == beta_j at {TRIALS} points over F_{PRIME}", failures)


def test_criterion_11_fault_injection():
    failures = []
    for p in GRID:
        S, gc, _, _ = instance(p)
        if S.n >= 3 and en.verify_complex(en.inject_fault(gc, "sign", 2)).passed:
            failures.append((p, "complex survives sign flip"))
        if en.verify_minimality(en.inject_fault(gc, "constant", 1)).passed:
            failures.append((p, "minimality survives constant"))
        if en.verify_homogeneity(en.inject_fault(gc, "shift", 1)).passed:
            failures.append((p, "homogeneity survives shift"))
        if oracle.hilbert_check(S, en.inject_fault(gc, "shift", S.n - 1)).passed:
            failures.append((p, "hilbert survives shift"))
        # n = 3: every differential already has maximal rank, so the zero
        # matrix is the smallest fault the rank condition can see
        fault = ("sign", 2) if S.n >= 4 else ("zero", 1)
        if oracle.generic_rank_check(en.inject_fault(gc, *fault), PRIME, TRIALS).passed:
            failures.append((p, f"rank survives {fault[0]}"))
    record(11, "verifiers reject injected faults", failures)
