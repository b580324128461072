"""Dense exact univariate polynomial arithmetic over the integers.

A polynomial is an immutable tuple of arbitrary-precision coefficients in
ascending order of exponent: ``IntPoly((1, 0, 1))`` is ``x^2 + 1``.  The
zero polynomial is the empty tuple; it has no degree, and every operation
that needs a leading coefficient rejects it.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterable


@dataclass(frozen=True, init=False)
class IntPoly:
    """Integer polynomial, normalized so the last coefficient is nonzero."""

    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        """Degree of a nonzero polynomial; the zero polynomial has none."""
        if not self.coeffs:
            raise ValueError("the zero polynomial has no degree")
        return len(self.coeffs) - 1

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __add__(self, other: IntPoly | int) -> IntPoly:
        return poly_add(self, _as_poly(other))

    __radd__ = __add__

    def __sub__(self, other: IntPoly | int) -> IntPoly:
        return poly_sub(self, _as_poly(other))

    def __rsub__(self, other: IntPoly | int) -> IntPoly:
        return poly_sub(_as_poly(other), self)

    def __neg__(self) -> IntPoly:
        return IntPoly(-c for c in self.coeffs)

    def __mul__(self, other: IntPoly | int) -> IntPoly:
        return poly_mul(self, _as_poly(other))

    __rmul__ = __mul__

    def __pow__(self, n: int) -> IntPoly:
        if n < 0:
            raise ValueError("negative polynomial powers are not defined")
        result = ONE
        base = self
        while n:
            if n & 1:
                result = poly_mul(result, base)
            n >>= 1
            if n:
                base = poly_mul(base, base)
        return result


def _as_poly(value: IntPoly | int) -> IntPoly:
    if isinstance(value, IntPoly):
        return value
    return IntPoly((value,))


ZERO = IntPoly()
ONE = IntPoly((1,))
X = IntPoly((0, 1))


def poly_add(p: IntPoly, q: IntPoly) -> IntPoly:
    """Coefficient-wise sum."""
    a, b = p.coeffs, q.coeffs
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return IntPoly(out)


def poly_sub(p: IntPoly, q: IntPoly) -> IntPoly:
    out = list(p.coeffs) + [0] * max(0, len(q.coeffs) - len(p.coeffs))
    for i, c in enumerate(q.coeffs):
        out[i] -= c
    return IntPoly(out)


def poly_mul(p: IntPoly, q: IntPoly) -> IntPoly:
    """Convolution product; degrees add for nonzero inputs."""
    a, b = p.coeffs, q.coeffs
    if not a or not b:
        return ZERO
    out = [0] * (len(a) + len(b) - 1)
    for i, c in enumerate(a):
        if c == 0:
            continue
        for j, d in enumerate(b):
            out[i + j] += c * d
    return IntPoly(out)


def poly_divrem_monic(g: IntPoly, f: IntPoly) -> tuple[IntPoly, IntPoly]:
    """Divide g by a monic f of degree >= 1: g = f*q + r with deg r < deg f.

    Exact over the integers because f is monic; non-monic or constant
    divisors are rejected.
    """
    if not f.is_monic:
        raise ValueError("divisor must be monic")
    df = f.degree
    if df < 1:
        raise ValueError("divisor must have degree >= 1")
    if g.is_zero or g.degree < df:
        return ZERO, g
    rem = list(g.coeffs)
    fc = f.coeffs
    quot = [0] * (len(rem) - df)
    for i in range(len(quot) - 1, -1, -1):
        c = rem[i + df]
        if c == 0:
            continue
        quot[i] = c
        for j in range(df + 1):
            rem[i + j] -= c * fc[j]
    return IntPoly(quot), IntPoly(rem)


def poly_eval(p: IntPoly, a: int) -> int:
    """Evaluate at an integer point by Horner's rule."""
    acc = 0
    for c in reversed(p.coeffs):
        acc = acc * a + c
    return acc


def poly_reduce_mod(p: IntPoly, n: int) -> IntPoly:
    """Reduce every coefficient to its canonical representative in [0, n)."""
    if n < 2:
        raise ValueError("modulus must be >= 2")
    return IntPoly(c % n for c in p.coeffs)


def make_gn(n: int) -> IntPoly:
    """The all-ones polynomial x^(n-1) + ... + x + 1; equals 1 for n = 1."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return IntPoly((1,) * n)


def make_power_of_linear(a: int, k: int) -> IntPoly:
    """Expanded (x - a)^k, monic of degree k."""
    if k < 0:
        raise ValueError("exponent must be >= 0")
    return IntPoly(comb(k, j) * (-a) ** (k - j) for j in range(k + 1))
