"""Exact integer matrices: companion matrices, polynomial evaluation at a
matrix, and fraction-free determinants."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .polycore import IntPoly


@dataclass(frozen=True, init=False)
class IntMatrix:
    """Square matrix of arbitrary-precision integers, row-major.

    The 0x0 matrix is permitted; its determinant is 1 (empty product).
    """

    entries: tuple[tuple[int, ...], ...]

    def __init__(self, rows: Iterable[Iterable[int]] = ()):
        entries = tuple(tuple(row) for row in rows)
        for row in entries:
            if len(row) != len(entries):
                raise ValueError("matrix must be square")
        object.__setattr__(self, "entries", entries)

    @property
    def dim(self) -> int:
        return len(self.entries)

    @classmethod
    def identity(cls, n: int) -> IntMatrix:
        return cls(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))

    @classmethod
    def zero(cls, n: int) -> IntMatrix:
        return cls(((0,) * n,) * n)

    def transpose(self) -> IntMatrix:
        return IntMatrix(zip(*self.entries)) if self.entries else self


def mat_mul(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    if a.dim != b.dim:
        raise ValueError("dimension mismatch")
    bt = list(zip(*b.entries))
    return IntMatrix(
        tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a.entries
    )


def mat_scalar_add_diag(m: IntMatrix, c: int) -> IntMatrix:
    """m + c*I, used by the Horner loop."""
    return IntMatrix(
        tuple(v + c if i == j else v for j, v in enumerate(row))
        for i, row in enumerate(m.entries)
    )


def companion_matrix(f: IntPoly) -> IntMatrix:
    """Companion matrix of a monic f: subdiagonal of ones, last column of
    negated low-order coefficients.  Degree 0 yields the empty matrix."""
    if not f.is_monic:
        raise ValueError("companion matrix requires a monic polynomial")
    m = f.degree
    rows = [[0] * m for _ in range(m)]
    for i in range(m - 1):
        rows[i + 1][i] = 1
    for i in range(m):
        rows[i][m - 1] = -f.coeffs[i]
    return IntMatrix(rows)


def matrix_poly_eval(g: IntPoly, m: IntMatrix) -> IntMatrix:
    """Evaluate g at a matrix by Horner's rule, exactly."""
    n = m.dim
    if g.is_zero or n == 0:
        return IntMatrix.zero(n)
    cs = g.coeffs
    acc = IntMatrix(
        tuple(cs[-1] if i == j else 0 for j in range(n)) for i in range(n)
    )
    for c in reversed(cs[:-1]):
        acc = mat_scalar_add_diag(mat_mul(acc, m), c)
    return acc


def det_bareiss(m: IntMatrix) -> int:
    """Exact determinant via Bareiss fraction-free elimination.

    All intermediate entries are minors of the input, so every division is
    exact.  Zero pivots are handled by swapping in the first row below with
    a nonzero entry in the pivot column; if none exists the determinant is 0.
    The empty matrix has determinant 1.
    """
    n = m.dim
    if n == 0:
        return 1
    a = [list(row) for row in m.entries]
    sign = 1
    prev = 1
    for k in range(n - 1):
        pivot = a[k][k]
        if pivot == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    pivot = a[k][k]
                    break
            else:
                return 0
        tail = a[k][k + 1 :]
        for i in range(k + 1, n):
            row = a[i]
            lead = row[k]
            if lead:
                row[k + 1 :] = [
                    (pivot * x - lead * y) // prev
                    for x, y in zip(row[k + 1 :], tail)
                ]
            elif prev != 1:
                row[k + 1 :] = [pivot * x // prev for x in row[k + 1 :]]
            else:
                row[k + 1 :] = [pivot * x for x in row[k + 1 :]]
        prev = pivot
    return sign * a[n - 1][n - 1]
