"""The n = 3 differentials and the top differential as printed, for golden tests."""

from repunit_resolution.polyalg import PolyMatrix, SparsePolynomial


def _x(i, e=1, nvars=3):
    return SparsePolynomial.var(nvars, i, e)


def example_a1(b, a):
    x = _x
    return PolyMatrix.from_rows([[
        x(2, b) * x(1, a + 1) - x(3, b + 1),
        -x(1, a + b + 1) + x(2) * x(3, b),
        x(1, b) * x(3) - x(2, b + 1),
    ]], 3)


def example_a2(b, a):
    x = _x
    return PolyMatrix.from_rows([
        [x(1, b), x(2)],
        [x(2, b), x(3)],
        [x(3, b), x(1, a + 1)],
    ], 3)


def top_differential(n, b, a):
    """Banded n(n-2) x (n-1) matrix: block k holds x_i^b in column k and
    the second row of X in column k+1."""
    def x(i, e=1):
        return SparsePolynomial.var(n, i, e)
    second = [x(i + 1) for i in range(1, n)] + [x(1, a + 1)]
    rows = []
    for k in range(n - 2):
        for i in range(1, n + 1):
            row = [SparsePolynomial.zero(n)] * (n - 1)
            row = list(row)
            row[k] = x(i, b)
            row[k + 1] = second[i - 1]
            rows.append(row)
    return PolyMatrix.from_rows(rows, n)
