"""Exact sparse polynomials in x1..xn with integer coefficients.

Polynomials are immutable maps from exponent tuples to nonzero ``int``
coefficients.  Terms are kept in graded-lex order (higher total degree
first, ties broken lexicographically on the exponent vector) so that text
output is byte-stable.
"""

from __future__ import annotations

import re
from typing import Iterable, Iterator, Mapping

import numpy as np

Monomial = tuple[int, ...]

_TERM_RE = re.compile(r"([+-]?)([^+-]+)")
_FACTOR_RE = re.compile(r"^x(\d+)(?:\^(\d+))?$")


def _order_key(mono: Monomial):
    return (sum(mono), mono)


class SparsePolynomial:
    __slots__ = ("nvars", "_terms", "_hash")

    def __init__(self, nvars: int, terms: Mapping[Monomial, int] | Iterable = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Monomial, int] = {}
        for mono, coeff in items:
            mono = tuple(int(e) for e in mono)
            if len(mono) != nvars:
                raise ValueError(f"monomial {mono} does not have {nvars} exponents")
            if any(e < 0 for e in mono):
                raise ValueError(f"negative exponent in {mono}")
            acc[mono] = acc.get(mono, 0) + int(coeff)
        self.nvars = nvars
        self._terms = {m: acc[m] for m in sorted(acc, key=_order_key, reverse=True)
                       if acc[m] != 0}
        self._hash = None

    # construction helpers
    @classmethod
    def zero(cls, nvars: int) -> "SparsePolynomial":
        return cls(nvars)

    @classmethod
    def constant(cls, nvars: int, value: int) -> "SparsePolynomial":
        return cls(nvars, {(0,) * nvars: value})

    @classmethod
    def monomial(cls, nvars: int, exponents: Monomial, coeff: int = 1) -> "SparsePolynomial":
        return cls(nvars, {tuple(exponents): coeff})

    @classmethod
    def var(cls, nvars: int, i: int, power: int = 1) -> "SparsePolynomial":
        """The monomial x_i**power, with ``i`` 1-based."""
        e = [0] * nvars
        e[i - 1] = power
        return cls(nvars, {tuple(e): 1})

    @property
    def terms(self) -> dict[Monomial, int]:
        return dict(self._terms)

    def __iter__(self) -> Iterator[tuple[Monomial, int]]:
        return iter(self._terms.items())

    def __len__(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def constant_term(self) -> int:
        return self._terms.get((0,) * self.nvars, 0)

    def _check(self, other: "SparsePolynomial") -> None:
        if other.nvars != self.nvars:
            raise ValueError(f"variable count mismatch: {self.nvars} vs {other.nvars}")

    def __add__(self, other):
        if isinstance(other, int):
            other = SparsePolynomial.constant(self.nvars, other)
        self._check(other)
        return SparsePolynomial(self.nvars, list(self) + list(other))

    __radd__ = __add__

    def __neg__(self):
        return SparsePolynomial(self.nvars, {m: -c for m, c in self})

    def __sub__(self, other):
        if isinstance(other, int):
            other = SparsePolynomial.constant(self.nvars, other)
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return SparsePolynomial(self.nvars, {m: c * other for m, c in self})
        self._check(other)
        acc: dict[Monomial, int] = {}
        for m1, c1 in self:
            for m2, c2 in other:
                m = tuple(x + y for x, y in zip(m1, m2))
                acc[m] = acc.get(m, 0) + c1 * c2
        return SparsePolynomial(self.nvars, acc)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, int):
            return self._terms == ({(0,) * self.nvars: other} if other else {})
        if not isinstance(other, SparsePolynomial):
            return NotImplemented
        return self.nvars == other.nvars and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, tuple(self._terms.items())))
        return self._hash

    # grading
    def degrees(self, weights) -> set[int]:
        return {sum(e * w for e, w in zip(mono, weights)) for mono in self._terms}

    def is_homogeneous(self, weights) -> bool:
        return len(self.degrees(weights)) <= 1

    def evaluate(self, point, p: int) -> int:
        """Value at ``point`` in F_p (coefficients reduced mod p)."""
        total = 0
        for mono, coeff in self:
            term = coeff % p
            for x, e in zip(point, mono):
                if e:
                    term = term * pow(int(x), e, p) % p
            total += term
        return total % p

    # text form
    def to_str(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for k, (mono, coeff) in enumerate(self):
            factors = [f"x{i + 1}" if e == 1 else f"x{i + 1}^{e}"
                       for i, e in enumerate(mono) if e]
            mag = abs(coeff)
            body = "*".join(([str(mag)] if mag != 1 or not factors else []) + factors)
            if k == 0:
                parts.append(("-" if coeff < 0 else "") + body)
            else:
                parts.append(("- " if coeff < 0 else "+ ") + body)
        return " ".join(parts)

    __str__ = to_str

    def __repr__(self):
        return f"SparsePolynomial({self.nvars}, {self.to_str()!r})"

    @classmethod
    def parse(cls, text: str, nvars: int) -> "SparsePolynomial":
        """Inverse of :meth:`to_str`; also accepts explicit ``c*`` and ``^1``."""
        compact = text.replace(" ", "")
        if compact in ("", "0"):
            return cls.zero(nvars)
        terms = []
        pos = 0
        for match in _TERM_RE.finditer(compact):
            if match.start() != pos:
                raise ValueError(f"cannot parse polynomial {text!r}")
            pos = match.end()
            sign = -1 if match.group(1) == "-" else 1
            coeff = sign
            exps = [0] * nvars
            for factor in match.group(2).split("*"):
                if factor.isdigit():
                    coeff *= int(factor)
                    continue
                fm = _FACTOR_RE.match(factor)
                if not fm:
                    raise ValueError(f"bad factor {factor!r} in {text!r}")
                i = int(fm.group(1))
                if not 1 <= i <= nvars:
                    raise ValueError(f"variable x{i} outside x1..x{nvars}")
                exps[i - 1] += int(fm.group(2) or 1)
            terms.append((tuple(exps), coeff))
        if pos != len(compact):
            raise ValueError(f"cannot parse polynomial {text!r}")
        return cls(nvars, terms)


def sdegree(p: SparsePolynomial, weights) -> int:
    """Common weighted degree of a homogeneous polynomial (0 for constants and 0)."""
    degs = sorted(p.degrees(weights))
    if len(degs) > 1:
        raise ValueError(f"polynomial {p} is not homogeneous: degrees {degs[0]} and {degs[-1]}")
    return degs[0] if degs else 0


class PolyMatrix:
    """Sparse matrix of polynomials; zero entries are never stored."""

    def __init__(self, rows: int, cols: int, nvars: int, entries=None):
        self.rows = rows
        self.cols = cols
        self.nvars = nvars
        self._entries: dict[tuple[int, int], SparsePolynomial] = {}
        for (r, q), poly in (entries or {}).items():
            if not (0 <= r < rows and 0 <= q < cols):
                raise IndexError(f"entry ({r}, {q}) outside {rows}x{cols}")
            if poly:
                self._entries[(r, q)] = poly

    @classmethod
    def identity(cls, size: int, nvars: int) -> "PolyMatrix":
        one = SparsePolynomial.constant(nvars, 1)
        return cls(size, size, nvars, {(i, i): one for i in range(size)})

    @classmethod
    def from_rows(cls, rows, nvars: int) -> "PolyMatrix":
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        return cls(len(rows), ncols, nvars,
                   {(i, j): p for i, r in enumerate(rows) for j, p in enumerate(r)})

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, key) -> SparsePolynomial:
        return self._entries.get(key) or SparsePolynomial.zero(self.nvars)

    def items(self):
        """Nonzero entries as ``((row, col), poly)``, row-major."""
        return sorted(self._entries.items())

    def nnz(self) -> int:
        return len(self._entries)

    def column(self, q: int) -> dict[int, SparsePolynomial]:
        return {r: p for (r, c), p in self._entries.items() if c == q}

    def is_zero(self) -> bool:
        return not self._entries

    def replace(self, row: int, col: int, poly: SparsePolynomial) -> "PolyMatrix":
        entries = dict(self._entries)
        entries[(row, col)] = poly
        if not poly:
            del entries[(row, col)]
        return PolyMatrix(self.rows, self.cols, self.nvars, entries)

    def to_rows(self) -> list[list[SparsePolynomial]]:
        return [[self[(i, j)] for j in range(self.cols)] for i in range(self.rows)]

    def evaluate(self, point, p: int):
        out = np.zeros((self.rows, self.cols), dtype=np.int64)
        for (r, q), poly in self._entries.items():
            out[r, q] = poly.evaluate(point, p)
        return out

    def __matmul__(self, other: "PolyMatrix") -> "PolyMatrix":
        return matmul(self, other)

    def __eq__(self, other):
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        return self.shape == other.shape and self._entries == other._entries

    def __repr__(self):
        return f"PolyMatrix({self.rows}x{self.cols}, nnz={self.nnz()})"


def matmul(A: PolyMatrix, B: PolyMatrix) -> PolyMatrix:
    if A.cols != B.rows:
        raise ValueError(f"shape mismatch: {A.shape} @ {B.shape}")
    by_row: dict[int, list[tuple[int, SparsePolynomial]]] = {}
    for (k, q), p in B._entries.items():
        by_row.setdefault(k, []).append((q, p))
    acc: dict[tuple[int, int], SparsePolynomial] = {}
    for (r, k), p in A._entries.items():
        for q, p2 in by_row.get(k, ()):
            prod = p * p2
            acc[(r, q)] = acc[(r, q)] + prod if (r, q) in acc else prod
    return PolyMatrix(A.rows, B.cols, A.nvars, acc)
