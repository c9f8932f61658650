"""Eagon-Northcott resolution of a generalized repunit semigroup ring.

The toric ideal is generated by the 2x2 minors of

    X = | x1^b  x2^b ... x_{n-1}^b  x_n^b     |
        | x2    x3   ... x_n        x1^(a+1)  |

Level ``j`` (1 <= j <= n-1) of the complex has one basis element per pair
(increasing (j+1)-subset of {1..n}, monomial y1^u1 y2^u2 with u1+u2 = j-1).
Basis elements are ordered by subset (lexicographic) and then by ``u1``
descending.  The element ``(I, u1, u2)`` sits in S-degree
``(u1 + 1) * c + sum(a_{i+1} for i in I)``.
"""

from __future__ import annotations

import itertools
import math
from collections import Counter
from dataclasses import dataclass, field, replace

from .polyalg import PolyMatrix, SparsePolynomial, sdegree
from .report import CheckReport
from .semigroup import InvariantError, RepunitSemigroup


@dataclass(frozen=True, order=True)
class ENBasisElement:
    indices: tuple[int, ...]
    u1: int
    u2: int

    def shift(self, S: RepunitSemigroup) -> int:
        return (self.u1 + 1) * S.c + sum(S.ext(i + 1) for i in self.indices)

    def __str__(self):
        idx = "^".join(f"e{i}" for i in self.indices)
        return f"{idx}*y1^{self.u1}*y2^{self.u2}"


def betti_number(n: int, j: int) -> int:
    if not 1 <= j <= n - 1:
        raise ValueError(f"homological degree j={j} outside 1..{n - 1}")
    return j * math.comb(n, j + 1)


def matrix_x(S: RepunitSemigroup) -> list[list[SparsePolynomial]]:
    n = S.n
    top = [SparsePolynomial.var(n, i, S.b) for i in range(1, n + 1)]
    bottom = [SparsePolynomial.var(n, i + 1) for i in range(1, n)]
    bottom.append(SparsePolynomial.var(n, 1, S.a + 1))
    return [top, bottom]


def _basis(n: int, j: int) -> list[ENBasisElement]:
    if not 1 <= j <= n - 1:
        raise ValueError(f"homological degree j={j} outside 1..{n - 1}")
    return [ENBasisElement(subset, u1, j - 1 - u1)
            for subset in itertools.combinations(range(1, n + 1), j + 1)
            for u1 in range(j - 1, -1, -1)]


def basis(S: RepunitSemigroup, j: int) -> list[ENBasisElement]:
    return _basis(S.n, j)


def shifts(S: RepunitSemigroup, j: int) -> list[int]:
    """Sorted multiset of basis-element degrees at level ``j``."""
    out = sorted(e.shift(S) for e in basis(S, j))
    if out and out[0] <= 0:
        raise InvariantError(f"non-positive shift {out[0]} at level {j} for {S.params}")
    return out


def closed_form_shifts(S: RepunitSemigroup, j: int) -> list[int]:
    """Direct enumeration of k*c + a_{i_1} + ... + a_{i_{j+1}}.

    k runs over 1..j and the indices over increasing subsets of {2..n+1}.
    Independent of the basis bookkeeping in :func:`shifts`.
    """
    if not 1 <= j <= S.n - 1:
        raise ValueError(f"homological degree j={j} outside 1..{S.n - 1}")
    ext = [S.ext(i) for i in range(2, S.n + 2)]
    return sorted(k * S.c + sum(sub)
                  for sub in itertools.combinations(ext, j + 1)
                  for k in range(1, j + 1))


def first_level_pair_shifts(S: RepunitSemigroup) -> list[int]:
    """Level-1 degrees written as a_{n-i+1} + b*a_{n-j}, 0 <= j < i <= n-1."""
    n = S.n
    return sorted(S.ext(n - i + 1) + S.b * S.ext(n - j)
                  for i in range(1, n) for j in range(i))


def penultimate_level_shifts(S: RepunitSemigroup) -> list[int]:
    """Level-(n-2) degrees k*c + sum of a_2..a_{n+1} omitting a_{j+1}."""
    n = S.n
    total = sum(S.ext(i) for i in range(2, n + 2))
    return sorted(k * S.c + total - S.ext(j + 1)
                  for k in range(1, n - 1) for j in range(1, n + 1))


def d1_matrix(S: RepunitSemigroup, X=None) -> PolyMatrix:
    X = X or matrix_x(S)
    cols = {}
    for q, e in enumerate(_basis(S.n, 1)):
        i, k = e.indices
        cols[(0, q)] = X[0][i - 1] * X[1][k - 1] - X[1][i - 1] * X[0][k - 1]
    return PolyMatrix(1, len(cols), S.n, cols)


def dj_matrix(S: RepunitSemigroup, j: int, X=None) -> PolyMatrix:
    if not 2 <= j <= S.n - 1:
        raise ValueError(f"dj_matrix needs 2 <= j <= {S.n - 1}, got {j}")
    X = X or matrix_x(S)
    src = _basis(S.n, j)
    dst = {e: r for r, e in enumerate(_basis(S.n, j - 1))}
    entries = {}
    for q, e in enumerate(src):
        u = (e.u1, e.u2)
        for k in (0, 1):
            if u[k] == 0:
                continue
            lowered = (u[0] - 1, u[1]) if k == 0 else (u[0], u[1] - 1)
            for pos, i in enumerate(e.indices):
                face = e.indices[:pos] + e.indices[pos + 1:]
                r = dst[ENBasisElement(face, *lowered)]
                entry = X[k][i - 1] if pos % 2 == 0 else -X[k][i - 1]
                entries[(r, q)] = entries[(r, q)] + entry if (r, q) in entries else entry
    return PolyMatrix(len(dst), len(src), S.n, entries)


def toric_minors(S: RepunitSemigroup) -> list[SparsePolynomial]:
    """The C(n, 2) binomial generators; each is checked to lie in the toric ideal."""
    minors = [d1_matrix(S)[(0, q)] for q in range(math.comb(S.n, 2))]
    for f in minors:
        terms = list(f)
        if len(terms) != 2 or sorted(c for _, c in terms) != [-1, 1]:
            raise InvariantError(f"minor {f} is not a binomial x^u - x^v")
        d1, d2 = (S.sdegree(m) for m, _ in terms)
        if d1 != d2:
            raise InvariantError(f"minor {f} has monomial degrees {d1} != {d2}")
    return minors


@dataclass
class GradedComplex:
    """Shifted free modules F_1..F_{n-1} with differentials delta_j: F_j -> F_{j-1}.

    ``differentials[j - 1]`` is delta_j and ``level_shifts[j - 1]`` lists the
    degree of each basis element of F_j in basis order.  F_0 is the ring
    itself in degree 0.
    """

    semigroup: RepunitSemigroup
    bases: list[list[ENBasisElement]]
    level_shifts: list[list[int]]
    differentials: list[PolyMatrix]
    faults: tuple[str, ...] = field(default=())

    @property
    def length(self) -> int:
        return len(self.differentials)

    @property
    def betti(self) -> tuple[int, ...]:
        return tuple(len(s) for s in self.level_shifts)

    def delta(self, j: int) -> PolyMatrix:
        return self.differentials[j - 1]

    def shifts_at(self, j: int) -> list[int]:
        return [0] if j == 0 else self.level_shifts[j - 1]

    def betti_table(self) -> dict[int, Counter]:
        return {j: Counter(self.shifts_at(j)) for j in range(1, self.length + 1)}


def build_resolution(S: RepunitSemigroup) -> GradedComplex:
    X = matrix_x(S)
    bases, level_shifts, diffs = [], [], []
    for j in range(1, S.n):
        B = basis(S, j)
        sh = [e.shift(S) for e in B]
        if min(sh) <= 0:
            raise InvariantError(f"non-positive shift {min(sh)} at level {j}")
        bases.append(B)
        level_shifts.append(sh)
        diffs.append(d1_matrix(S, X) if j == 1 else dj_matrix(S, j, X))
    return GradedComplex(S, bases, level_shifts, diffs)


def verify_complex(gc: GradedComplex) -> CheckReport:
    for j in range(2, gc.length + 1):
        prod = gc.delta(j - 1) @ gc.delta(j)
        if not prod.is_zero():
            (r, q), poly = prod.items()[0]
            return CheckReport("complex", False,
                               f"delta_{j - 1}*delta_{j} nonzero at ({r}, {q}): {poly}")
    return CheckReport("complex", True, f"{max(gc.length - 1, 0)} products vanish")


def verify_homogeneity(gc: GradedComplex) -> CheckReport:
    weights = gc.semigroup.generators
    for j in range(1, gc.length + 1):
        src, dst = gc.shifts_at(j), gc.shifts_at(j - 1)
        for (r, q), poly in gc.delta(j).items():
            degs = sorted(poly.degrees(weights))
            want = src[q] - dst[r]
            if degs != [want]:
                return CheckReport("homogeneity", False,
                                   f"delta_{j}[{r},{q}] = {poly} has degrees {degs}, "
                                   f"shift difference {want}")
    return CheckReport("homogeneity", True)


def verify_minimality(gc: GradedComplex) -> CheckReport:
    for j in range(1, gc.length + 1):
        for (r, q), poly in gc.delta(j).items():
            if poly.constant_term():
                return CheckReport("minimality", False,
                                   f"delta_{j}[{r},{q}] = {poly} has a unit term")
    return CheckReport("minimality", True, f"{gc.length} levels checked")


def verify_betti_counts(gc: GradedComplex) -> CheckReport:
    n = gc.semigroup.n
    for j in range(1, n):
        want = betti_number(n, j)
        d = gc.delta(j)
        rows = 1 if j == 1 else betti_number(n, j - 1)
        if len(gc.shifts_at(j)) != want or d.shape != (rows, want):
            return CheckReport("betti-counts", False,
                               f"level {j}: {len(gc.shifts_at(j))} shifts, matrix {d.shape}, "
                               f"expected {want}")
    if gc.length != n - 1:
        return CheckReport("betti-counts", False, f"{gc.length} levels, expected {n - 1}")
    return CheckReport("betti-counts", True, f"beta = {gc.betti}")


FAULT_KINDS = ("sign", "constant", "shift", "zero")


def inject_fault(gc: GradedComplex, kind: str, level: int | None = None) -> GradedComplex:
    """Return a copy of ``gc`` with one deliberate defect (for verifier tests).

    sign      flip the sign of the first nonzero entry of delta_level
    constant  add 1 to the first nonzero entry of delta_level
    shift     raise the first shift of level ``level`` by one
    zero      replace delta_level by the zero matrix
    """
    if level is None:
        level = 2 if gc.length >= 2 else 1
    diffs = list(gc.differentials)
    level_shifts = [list(s) for s in gc.level_shifts]
    d = diffs[level - 1]
    if kind == "sign":
        (r, q), poly = d.items()[0]
        diffs[level - 1] = d.replace(r, q, -poly)
    elif kind == "constant":
        (r, q), poly = d.items()[0]
        diffs[level - 1] = d.replace(r, q, poly + 1)
    elif kind == "shift":
        level_shifts[level - 1][0] += 1
    elif kind == "zero":
        diffs[level - 1] = PolyMatrix(d.rows, d.cols, d.nvars)
    else:
        raise ValueError(f"unknown fault kind {kind!r}; choose from {FAULT_KINDS}")
    return replace(gc, differentials=diffs, level_shifts=level_shifts,
                   faults=gc.faults + (f"{kind}@{level}",))


def _normalize_row(row):
    for p in row:
        if p:
            lead = next(iter(p))[1]
            return tuple(-x if lead < 0 else x for x in row)
    return tuple(row)


def signed_permutation_equivalent(A: PolyMatrix, B: PolyMatrix) -> bool:
    """True iff ``B = P A Q`` for signed permutation matrices P and Q.

    Column permutations and signs are searched exhaustively; rows are then
    compared as a multiset up to sign.  Intended for small matrices.
    """
    if A.shape != B.shape:
        return False
    target = Counter(_normalize_row(r) for r in B.to_rows())
    rows_a = A.to_rows()
    for perm in itertools.permutations(range(A.cols)):
        for signs in itertools.product((1, -1), repeat=A.cols):
            cand = Counter(_normalize_row([row[perm[c]] * signs[c] for c in range(A.cols)])
                           for row in rows_a)
            if cand == target:
                return True
    return False
