"""Independent ground truth for graded Betti numbers.

The dimension of Tor_j(k, k[S]) in degree s equals the dimension of the
reduced homology H~_{j-1} of the squarefree divisor complex

    Delta_s = { F subset {1..n} : s - sum_{i in F} a_i  in  S },

so scanning s and computing simplicial homology over F_p recovers the whole
Betti table without touching any polynomial.  Two further checks need only
the claimed shifts and matrices: the Hilbert series identity and the
Buchsbaum-Eisenbud rank condition at random points.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

import numpy as np

from . import kernels
from .encomplex import GradedComplex, closed_form_shifts
from .report import CheckReport
from .semigroup import RepunitSemigroup

DEFAULT_PRIME = 32003
_CHUNK = 4096


@dataclass(frozen=True)
class SimplicialComplex:
    """Complex on vertices 1..n; faces are bitmasks (bit i-1 is vertex i)."""

    n: int
    faces: frozenset[int]

    @classmethod
    def from_faces(cls, n: int, faces) -> "SimplicialComplex":
        masks = set()
        for face in faces:
            m = 0
            for v in face:
                m |= 1 << (v - 1)
            masks.add(m)
        return cls(n, frozenset(masks))

    @classmethod
    def from_row(cls, n: int, row) -> "SimplicialComplex":
        return cls(n, frozenset(int(f) for f in np.flatnonzero(row)))

    def face_row(self) -> np.ndarray:
        row = np.zeros(1 << self.n, dtype=np.uint8)
        row[list(self.faces)] = 1
        return row

    def vertex_sets(self) -> list[tuple[int, ...]]:
        return sorted(tuple(v + 1 for v in range(self.n) if f >> v & 1) for f in self.faces)

    def is_downward_closed(self) -> bool:
        return all(f ^ (1 << v) in self.faces
                   for f in self.faces for v in range(self.n) if f >> v & 1)


def divisor_complex(S: RepunitSemigroup, s: int) -> SimplicialComplex:
    if s < 0:
        raise ValueError(f"degree must be nonnegative, got {s}")
    sums = S.subset_sums
    return SimplicialComplex(S.n, frozenset(
        f for f in range(1 << S.n) if s >= sums[f] and S.contains(s - sums[f])))


def reduced_homology_dims(K: SimplicialComplex, p: int = DEFAULT_PRIME) -> list[int]:
    """dim H~_d(K; F_p) for d = -1, 0, ..., n-1."""
    return [int(x) for x in kernels.reduced_homology(K.face_row(), K.n, p)]


@dataclass
class OracleBettiTable:
    """Nonzero graded Betti numbers ``(j, s) -> dim`` found by the scan up to ``bound``."""

    dims: dict[tuple[int, int], int]
    bound: int
    prime: int

    def level(self, j: int) -> Counter:
        return Counter({s: d for (jj, s), d in self.dims.items() if jj == j})

    def levels(self) -> dict[int, Counter]:
        out: dict[int, Counter] = {}
        for (j, s), d in self.dims.items():
            out.setdefault(j, Counter())[s] = d
        return out

    def total(self, j: int) -> int:
        return sum(self.level(j).values())

    def as_multiset(self, j: int) -> list[int]:
        return sorted(self.level(j).elements())


def scan_bound(S: RepunitSemigroup, gc: GradedComplex | None = None,
               margin: int | None = None) -> int:
    """Largest claimed shift plus a safety margin (default max a_i)."""
    if gc is not None:
        top = max(max(s) for s in gc.level_shifts)
    else:
        top = max(max(closed_form_shifts(S, j)) for j in range(1, S.n))
    return top + (max(S.generators) if margin is None else margin)


def graded_betti_oracle(S: RepunitSemigroup, p: int = DEFAULT_PRIME,
                        bound: int | None = None) -> OracleBettiTable:
    """Scan degrees 1..bound and record every nonzero Tor dimension."""
    if bound is None:
        bound = scan_bound(S)
    apery = np.asarray(S.apery_set(), dtype=np.int64)
    sums = np.asarray(S.subset_sums, dtype=np.int64)
    dims: dict[tuple[int, int], int] = {}
    for lo in range(1, bound + 1, _CHUNK):
        hi = min(bound, lo + _CHUNK - 1)
        faces = kernels.divisor_faces(apery, S.multiplicity, sums, lo, hi)
        table = kernels.betti_scan(faces, S.n, p)
        for row, col in zip(*np.nonzero(table)):
            # column d+1 holds H~_d, which is Tor_{d+1}
            dims[(int(col), lo + int(row))] = int(table[row, col])
    return OracleBettiTable(dims, bound, p)


def compare_with_oracle(gc: GradedComplex, table: OracleBettiTable) -> CheckReport:
    """Claimed shift multisets must equal the oracle's, level by level."""
    claimed_max = max(max(s) for s in gc.level_shifts)
    if table.bound < claimed_max:
        return CheckReport("oracle-betti", False,
                           f"scan bound {table.bound} below claimed max shift {claimed_max}")
    beyond = sorted((j, s) for (j, s) in table.dims if s > claimed_max)
    if beyond:
        return CheckReport("oracle-betti", False,
                           f"Tor found above claimed maximum {claimed_max}: {beyond[:5]}")
    for j in sorted({j for j, _ in table.dims} | set(range(1, gc.length + 1))):
        want = Counter(gc.shifts_at(j)) if 1 <= j <= gc.length else Counter()
        got = table.level(j)
        if got != want:
            missing = sorted((want - got).elements())
            extra = sorted((got - want).elements())
            return CheckReport("oracle-betti", False,
                               f"level {j}: missing {missing[:5]}, unexpected {extra[:5]}")
    return CheckReport("oracle-betti", True, f"scanned degrees 1..{table.bound} over F_{table.prime}")


def hilbert_series_residual(S: RepunitSemigroup, gc: GradedComplex, T: int) -> np.ndarray:
    """Coefficients up to t^T of K(t)/prod(1 - t^a_i) minus the indicator of S.

    ``K(t) = 1 + sum_j (-1)^j sum_k t^{s_jk}`` is built from the claimed shifts.
    """
    all_shifts = [(j, s) for j in range(1, gc.length + 1) for s in gc.shifts_at(j)]
    growth = 1 + len(all_shifts)
    for g in S.generators:
        growth *= T // g + 1
    dtype = np.int64 if growth < kernels.INT64_SAFE else object
    series = np.zeros(T + 1, dtype=dtype)
    series[0] = 1
    for j, s in all_shifts:
        if s <= T:
            series[s] += (-1) ** j
    for g in S.generators:
        series = kernels.divide_one_minus_tpow(series, g)
    member = kernels.member_mask(S.apery_set(), S.multiplicity, np.arange(T + 1))
    return series - member.astype(dtype)


def hilbert_check(S: RepunitSemigroup, gc: GradedComplex, T: int | None = None) -> CheckReport:
    if T is None:
        T = S.frobenius() + max(max(s) for s in gc.level_shifts) + 1
    resid = hilbert_series_residual(S, gc, T)
    bad = np.flatnonzero(resid != 0)
    if bad.size:
        k = int(bad[0])
        return CheckReport("hilbert", False,
                           f"series differs at t^{k} (residual {resid[k]}), T={T}")
    return CheckReport("hilbert", True, f"agrees up to t^{T}")


def generic_ranks(gc: GradedComplex, p: int = DEFAULT_PRIME, trials: int = 5,
                  seed: int | None = 0) -> list[int]:
    """Max over random points of rank(delta_j mod p), for j = 1..length."""
    rng = np.random.default_rng(seed)
    n = gc.semigroup.n
    ranks = [0] * gc.length
    for _ in range(trials):
        point = [int(x) for x in rng.integers(1, p, size=n)]
        for j in range(1, gc.length + 1):
            r = kernels.rank_mod_p(gc.delta(j).evaluate(point, p), p)
            ranks[j - 1] = max(ranks[j - 1], r)
    return ranks


def generic_rank_check(gc: GradedComplex, p: int = DEFAULT_PRIME, trials: int = 5,
                       seed: int | None = 0) -> CheckReport:
    """Expected ranks r_j + r_{j+1} must equal the module rank at every level."""
    if trials < 1:
        raise ValueError("trials must be >= 1")
    ranks = generic_ranks(gc, p, trials, seed) + [0]
    betti = [1] + list(gc.betti)
    r = [0] + ranks
    for j in range(0, gc.length + 1):
        if r[j] + r[j + 1] != betti[j]:
            return CheckReport("generic-rank", False,
                               f"level {j}: r_{j} + r_{j + 1} = {r[j]} + {r[j + 1]} != {betti[j]}")
    return CheckReport("generic-rank", True, f"ranks {ranks[:-1]} over F_{p}")


def pf_from_table(S: RepunitSemigroup, table: OracleBettiTable) -> set[int]:
    """Top-level Betti degrees minus the sum of generators."""
    total = sum(S.generators)
    return {s - total for s in table.level(S.n - 1)}
