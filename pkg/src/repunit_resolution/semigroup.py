"""Generalized repunit numerical semigroups.

For a base ``b >= 2``, embedding dimension ``n >= 2`` and step ``a >= 1``
coprime to ``a1 = 1 + b + ... + b**(n-1)``, the semigroup is generated by
``a1 < a2 < ... < an`` with ``a_i - a_{i-1} = a * b**(i-2)``.  Two derived
quantities drive the graded resolution: the extended generator
``a_{n+1} = (a + 1) * a1`` and the constant ``c = b**n - 1 - a``.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field
from functools import cached_property

from . import kernels


class ParameterError(ValueError):
    """Raised for parameter triples outside the repunit family."""


class InvariantError(AssertionError):
    """Raised when a claimed structural identity fails for concrete input."""


@dataclass(frozen=True)
class RepunitParams:
    b: int
    n: int
    a: int

    def validate(self) -> None:
        if self.b < 2:
            raise ParameterError(f"base b must be >= 2, got b={self.b}")
        if self.n < 2:
            raise ParameterError(f"embedding dimension n must be >= 2, got n={self.n}")
        if self.a < 1:
            raise ParameterError(f"step a must be >= 1, got a={self.a}")
        a1 = repunit(self.b, self.n)
        g = math.gcd(self.a, a1)
        if g != 1:
            raise ParameterError(
                f"a must be coprime to a1: gcd({self.a}, {a1}) = {g} != 1")


def repunit(b: int, n: int) -> int:
    return sum(b**j for j in range(n))


@dataclass(frozen=True)
class RepunitSemigroup:
    """An immutable generalized repunit semigroup with cached Apéry data.

    Generators are stored 1-based in the mathematical sense but as a
    0-based tuple: ``generators[0]`` is a1.  ``ext(i)`` gives a_i for
    ``i = 1..n+1``.
    """

    params: RepunitParams
    generators: tuple[int, ...]
    extended: int
    c: int
    _apery: tuple[int, ...] = field(repr=False, compare=False)

    @property
    def b(self) -> int:
        return self.params.b

    @property
    def n(self) -> int:
        return self.params.n

    @property
    def a(self) -> int:
        return self.params.a

    @property
    def multiplicity(self) -> int:
        return self.generators[0]

    def ext(self, i: int) -> int:
        """Return a_i for 1 <= i <= n+1 (a_{n+1} is the extended generator)."""
        if i == self.n + 1:
            return self.extended
        if not 1 <= i <= self.n:
            raise IndexError(f"generator index {i} outside 1..{self.n + 1}")
        return self.generators[i - 1]

    def contains(self, s: int) -> bool:
        if s < 0:
            raise ValueError(f"membership is only defined for s >= 0, got {s}")
        return self._apery[s % self.multiplicity] <= s

    __contains__ = contains

    def apery_set(self, m: int | None = None) -> list[int]:
        """Least element of S in each residue class modulo ``m`` (default a1).

        Entry ``r`` of the result is congruent to ``r`` modulo ``m``.
        """
        if m is None:
            return list(self._apery)
        if m <= 0 or not self.contains(m):
            raise ValueError(f"Apéry set needs a positive element of S, {m} is not one")
        return kernels.apery_table(self.generators, m)

    def frobenius(self) -> int:
        return max(self._apery) - self.multiplicity

    def gaps(self) -> list[int]:
        m = self.multiplicity
        # gaps in class r are r, r+m, ... below the Apéry element
        return sorted(x for r, w in enumerate(self._apery) for x in range(r, w, m))

    def pf_bruteforce(self) -> set[int]:
        """Pseudo-Frobenius numbers: gaps x with x + a_i in S for every generator."""
        return {x for x in self.gaps()
                if all(self.contains(x + g) for g in self.generators)}

    def pf_formula(self) -> set[int]:
        """The n-1 values k*c + a*a1, k = 1..n-1, checked to be gaps of S."""
        vals = {k * self.c + self.a * self.multiplicity for k in range(1, self.n)}
        for v in sorted(vals):
            if v <= 0 or self.contains(v):
                raise InvariantError(
                    f"k*c + a*a1 = {v} is not a positive gap of S{self.generators}")
        if len(vals) != self.n - 1:
            raise InvariantError(f"PF formula yields {len(vals)} values, expected {self.n - 1}")
        return vals

    def sdegree(self, exponents) -> int:
        """S-degree sum(e_i * a_i) of an exponent vector."""
        return sum(e * g for e, g in zip(exponents, self.generators))

    @cached_property
    def subset_sums(self) -> list[int]:
        """``subset_sums[F]`` is the sum of a_i over the bits i of ``F``."""
        sums = [0] * (1 << self.n)
        for f in range(1, 1 << self.n):
            low = (f & -f).bit_length() - 1
            sums[f] = sums[f & (f - 1)] + self.generators[low]
        return sums


def closed_form(b: int, n: int, a: int) -> tuple[list[int], int, int]:
    """Generators a1..an, a_{n+1} and c, without any validity checks."""
    gens = [repunit(b, n)]
    for i in range(2, n + 1):
        gens.append(gens[-1] + a * b ** (i - 2))
    return gens, (a + 1) * gens[0], b**n - 1 - a


def construct(b: int, n: int, a: int) -> RepunitSemigroup:
    """Build the semigroup for ``(b, n, a)``; raises ParameterError if invalid."""
    params = RepunitParams(b, n, a)
    params.validate()
    if a == 1:
        warnings.warn(
            "a = 1 lies outside the a > 1 range used for the resolution; "
            "results rely on oracle verification", stacklevel=2)
    gens, extended, c = closed_form(b, n, a)
    if math.gcd(*gens) != 1:
        raise InvariantError(f"generators {gens} are not coprime")
    apery = kernels.apery_table(gens, gens[0])
    if min(apery) < 0:
        raise InvariantError("Apéry table has unreachable residues")
    return RepunitSemigroup(params, tuple(gens), extended, c, tuple(apery))


def step_identity_holds(S: RepunitSemigroup) -> bool:
    """b * a_i == c + a_{i+1} for every i = 1..n."""
    return all(S.b * S.ext(i) == S.c + S.ext(i + 1) for i in range(1, S.n + 1))
