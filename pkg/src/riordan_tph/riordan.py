"""Riordan arrays: pairs ``(g, f)`` acting as lower-triangular matrices.

Column ``k`` of ``(g, f)`` has generating function ``g(x) * f(x)**k``.  The
group law is ``(g, f)(h, l) = (g * h(f), l(f))`` with identity ``(1, x)``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .matrix import TriMatrix
from .powerseries import (Series, TruncationError, aerate, compose, default_order, div, mul,
                          reversion)


@dataclass(frozen=True, eq=False)
class Riordan:
    g: Series
    f: Series

    def __post_init__(self):
        if self.g.order < 1 or self.g.coeffs[0] == 0:
            raise ValueError("Riordan array needs g(0) != 0")
        if self.f.order < 2 or self.f.coeffs[0] != 0 or self.f.coeffs[1] != 1:
            raise ValueError("Riordan array needs f(0) = 0 and f'(0) = 1")

    @property
    def order(self) -> int:
        return min(self.g.order, self.f.order)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Riordan):
            return NotImplemented
        return self.g == other.g and self.f == other.f

    __hash__ = None

    def __mul__(self, other: Riordan) -> Riordan:
        return r_mul(self, other)

    def inverse(self) -> Riordan:
        return r_inv(self)

    def matrix(self, n: int) -> TriMatrix:
        return to_matrix(self, n)

    def __call__(self, a: Series) -> Series:
        return ftra_series(self, a)


def identity(order: int | None = None) -> Riordan:
    return Riordan(Series.constant(1, order), Series.x(order))


def to_matrix(r: Riordan, n: int) -> TriMatrix:
    """The ``n x n`` leading block of ``r``; entry ``(i, k) = [x^i] g f^k``."""
    if r.order < n:
        raise TruncationError(f"Riordan pair known to order {r.order}, need {n}")
    g = r.g.truncate(n)
    f = r.f.truncate(n)
    cols = []
    col = g
    for _ in range(n):
        cols.append(col.coeffs)
        col = mul(col, f)
    return TriMatrix([[cols[k][i] if k <= i else 0 for k in range(n)] for i in range(n)], n)


def r_mul(a: Riordan, b: Riordan) -> Riordan:
    """Group product ``(g, f)(h, l) = (g * h(f), l(f))``."""
    return Riordan(mul(a.g, compose(b.g, a.f)), compose(b.f, a.f))


def r_inv(r: Riordan) -> Riordan:
    """Inverse ``(1 / g(fbar), fbar)`` where ``fbar`` is the reversion of ``f``."""
    fbar = reversion(r.f)
    gf = compose(r.g, fbar)
    return Riordan(div(Series.constant(1, gf.order), gf), fbar)


def ftra_series(r: Riordan, a: Series) -> Series:
    """Action of the array on a generating function: ``g(x) * a(f(x))``."""
    return mul(r.g, compose(a, r.f))


def sequence_array(g: Series) -> Riordan:
    """The Appell array ``(g, x)``; entry ``(n, k)`` is ``g_{n-k}``."""
    return Riordan(g, Series.x(g.order))


def binomial_power(m, order: int | None = None) -> Riordan:
    """``B^m = (1/(1 - m x), x/(1 - m x))``, entries ``C(n, k) m^(n-k)``."""
    order = default_order() if order is None else order
    den = Series.polynomial([1, -Fraction(m)], order)
    one = Series.constant(1, order)
    return Riordan(div(one, den), div(Series.x(order), den))


def matrix_reversal(m: TriMatrix) -> TriMatrix:
    """Row-wise reversal: entry ``(i, j) = m[i, i - j]``."""
    n = m.n
    return TriMatrix([[m[i, i - j] if j <= i else 0 for j in range(n)] for i in range(n)], n)


def aerate_matrix(m: TriMatrix, n: int | None = None) -> TriMatrix:
    """Aeration: entry ``(i, j)`` is ``rev(m)[(i+j)/2, (i-j)/2]`` when ``i - j`` is even.

    Entries of the output draw on rows up to ``(i + j) / 2`` of ``m``, so the
    output is at most as large as ``m`` itself.
    """
    n = m.n if n is None else n
    if n > m.n:
        raise TruncationError(f"aeration of a {m.n}x{m.n} block is known only up to size {m.n}")
    rev = matrix_reversal(m)

    def entry(i, j):
        if j > i or (i - j) % 2:
            return 0
        return rev[(i + j) // 2, (i - j) // 2]

    return TriMatrix.from_function(n, n, entry)


def aerate_riordan(r: Riordan) -> Riordan:
    """Aeration at the level of generating functions: ``(g(x^2), x h(x^2))`` for ``f = x h``."""
    h = r.f.shift_down(1)
    return Riordan(aerate(r.g), aerate(h).shift_up(1))
