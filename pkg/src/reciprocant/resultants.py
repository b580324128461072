"""Resultants of monic integer polynomials.

Two independent methods are provided: "barnett" (determinant of g evaluated
at the companion matrix of f, the library default) and "sylvester" (the
classical coefficient-matrix determinant), kept as a cross-checking oracle.
Both are normalized so that Res(f, g) equals the product of g over the
roots of f when f splits.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Callable, Optional

from .exactlinalg import IntMatrix, companion_matrix, det_bareiss, matrix_poly_eval
from .polycore import IntPoly, make_gn, poly_divrem_monic

METHODS = ("barnett", "sylvester")

# Test-only fault injection: when set, applied to the Barnett matrix before
# its determinant is taken.  Must stay None in production use.
_matrix_fault_hook: Optional[Callable[[IntMatrix], IntMatrix]] = None


def _check_monic(p: IntPoly, name: str) -> None:
    if p.is_zero:
        raise ValueError(f"{name} must be nonzero")
    if not p.is_monic:
        raise ValueError(f"{name} must be monic")


def _barnett_matrix(f: IntPoly, g: IntPoly) -> IntMatrix:
    """g evaluated at the companion matrix of f, built column by column.

    Column j holds the coefficients of x^j * g(x) reduced mod f(x); this is
    exactly matrix_poly_eval(g, companion_matrix(f)) because the companion
    matrix is multiplication by x on the monomial basis of Z[x]/(f), but
    costs O(m^2) instead of deg(g) full matrix products.
    """
    m = f.degree
    if m == 0:
        return IntMatrix()
    _, r = poly_divrem_monic(g, f) if g.degree >= m else (None, g)
    col = list(r.coeffs) + [0] * (m - len(r.coeffs))
    fc = f.coeffs
    cols = [col]
    for _ in range(m - 1):
        lead = col[-1]
        col = [0] + col[:-1]
        if lead:
            for i in range(m):
                col[i] -= lead * fc[i]
        cols.append(col)
    return IntMatrix(zip(*cols))


def _resultant_barnett(f: IntPoly, g: IntPoly) -> int:
    mat = _barnett_matrix(f, g)
    if _matrix_fault_hook is not None:
        mat = _matrix_fault_hook(mat)
    return det_bareiss(mat)


def _resultant_sylvester(f: IntPoly, g: IntPoly) -> int:
    """Determinant of the (m+n) x (m+n) Sylvester matrix: m rows of shifted
    g-coefficients above n rows of shifted f-coefficients, sign-normalized
    by (-1)^(m*n) to agree with the Barnett convention."""
    m, n = f.degree, g.degree
    size = m + n
    if size == 0:
        return 1
    gd = list(reversed(g.coeffs))
    fd = list(reversed(f.coeffs))
    rows = []
    for i in range(m):
        rows.append([0] * i + gd + [0] * (size - n - 1 - i))
    for i in range(n):
        rows.append([0] * i + fd + [0] * (size - m - 1 - i))
    det = det_bareiss(IntMatrix(rows))
    return -det if (m * n) % 2 else det


def resultant(f: IntPoly, g: IntPoly, method: str = "barnett") -> int:
    """Resultant of two monic polynomials (degree 0 allowed)."""
    _check_monic(f, "f")
    _check_monic(g, "g")
    if method == "barnett":
        return _resultant_barnett(f, g)
    if method == "sylvester":
        return _resultant_sylvester(f, g)
    raise ValueError(f"unknown method {method!r}; expected one of {METHODS}")


@dataclass(frozen=True)
class EuclidChain:
    """Index pairs (m_k, n_k) of the Euclidean reduction on all-ones
    polynomials, from the starting pair down to a pair containing 1."""

    pairs: tuple[tuple[int, int], ...]

    def __iter__(self):
        return iter(self.pairs)

    def __len__(self) -> int:
        return len(self.pairs)


def gchain_resultant(m: int, n: int) -> tuple[int, EuclidChain]:
    """Resultant of the all-ones polynomials g_m, g_n for coprime m, n,
    computed by replaying the Euclidean reduction (m, n) -> (n mod m, m).

    Each step checks that dividing g_n by g_m really leaves remainder
    g_(n mod m); the value is the resultant of the final pair, always 1.
    """
    if m < 1 or n < 1:
        raise ValueError("indices must be positive")
    if gcd(m, n) != 1:
        raise ValueError(f"indices must be coprime, got gcd({m}, {n}) = {gcd(m, n)}")
    a, b = sorted((m, n))
    pairs = [(a, b)]
    while a > 1:
        r = b % a
        _, rem = poly_divrem_monic(make_gn(b), make_gn(a))
        if rem != make_gn(r):
            raise ArithmeticError(
                f"division replay failed: g_{b} mod g_{a} != g_{r}"
            )
        a, b = r, a
        pairs.append((a, b))
    value = resultant(make_gn(pairs[-1][0]), make_gn(pairs[-1][1]))
    return value, EuclidChain(tuple(pairs))


def check_res4(f: IntPoly, q: IntPoly, r: IntPoly) -> bool:
    """Build g = f*q + r from monic f, q, r with deg r < deg f and report
    whether Res(f, g) = Res(f, r)."""
    _check_monic(f, "f")
    _check_monic(q, "q")
    _check_monic(r, "r")
    if r.degree >= f.degree:
        raise ValueError("remainder degree must be smaller than divisor degree")
    g = f * q + r
    return resultant(f, g) == resultant(f, r)
