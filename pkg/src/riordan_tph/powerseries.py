"""Truncated formal power series with exact rational coefficients.

A :class:`Series` carries its coefficients together with the number of
coefficients that are actually known (its *order*).  Binary operations
return a result whose order is the minimum of the operand orders, so a
truncated value is never silently extended with made-up zeros.
"""
from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence

_DEFAULT_ORDER = 64


def default_order() -> int:
    return _DEFAULT_ORDER


def set_default_order(order: int) -> None:
    """Set the truncation order used by constructors when none is given."""
    global _DEFAULT_ORDER
    if order < 1:
        raise ValueError("order must be positive")
    _DEFAULT_ORDER = int(order)


class TruncationError(ValueError):
    """Raised when a coefficient beyond the known order is requested."""


def _frac(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot use {value!r} as an exact rational")


class Series:
    """A power series known up to (but excluding) ``x**order``."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Iterable = (), order: int | None = None):
        c = [_frac(v) for v in coeffs]
        if order is None:
            order = len(c) if c else default_order()
        if order < 0:
            raise ValueError("order must be non-negative")
        if len(c) < order:
            c.extend([Fraction(0)] * (order - len(c)))
        self._c = tuple(c[:order])

    # -- constructors -------------------------------------------------
    @classmethod
    def constant(cls, value, order: int | None = None) -> Series:
        order = default_order() if order is None else order
        return cls([value], order)

    @classmethod
    def x(cls, order: int | None = None) -> Series:
        order = default_order() if order is None else order
        return cls([0, 1], order)

    @classmethod
    def polynomial(cls, coeffs: Sequence, order: int | None = None) -> Series:
        """Exact polynomial, padded with zeros up to ``order``."""
        order = default_order() if order is None else order
        return cls(list(coeffs)[:order], order)

    @classmethod
    def rational(cls, num: Sequence, den: Sequence, order: int | None = None) -> Series:
        """Expansion of ``num(x)/den(x)`` for integer/rational polynomials."""
        return div(cls.polynomial(num, order), cls.polynomial(den, order))

    # -- basic protocol -----------------------------------------------
    @property
    def order(self) -> int:
        return len(self._c)

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._c

    def __len__(self) -> int:
        return len(self._c)

    def __getitem__(self, n):
        if isinstance(n, slice):
            return self._c[n]
        return coeff(self, n)

    def __iter__(self):
        return iter(self._c)

    def __repr__(self) -> str:
        shown = ", ".join(str(v) for v in self._c[:12])
        more = ", ..." if self.order > 12 else ""
        return f"Series([{shown}{more}], order={self.order})"

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Series.constant(other, self.order)
        if not isinstance(other, Series):
            return NotImplemented
        n = min(self.order, other.order)
        return self._c[:n] == other._c[:n]

    __hash__ = None

    def truncate(self, order: int) -> Series:
        if order > self.order:
            raise TruncationError(f"cannot extend a series of order {self.order} to {order}")
        return Series(self._c[:order], order)

    def valuation(self) -> int | None:
        """Index of the first nonzero coefficient, or None if all known ones vanish."""
        for i, v in enumerate(self._c):
            if v:
                return i
        return None

    # -- arithmetic operators -----------------------------------------
    def _coerce(self, other) -> Series:
        if isinstance(other, Series):
            return other
        return Series.constant(_frac(other), self.order)

    def __add__(self, other):
        return add(self, self._coerce(other))

    __radd__ = __add__

    def __sub__(self, other):
        return sub(self, self._coerce(other))

    def __rsub__(self, other):
        return sub(self._coerce(other), self)

    def __neg__(self):
        return scale(self, -1)

    def __mul__(self, other):
        if isinstance(other, Series):
            return mul(self, other)
        return scale(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Series):
            return div(self, other)
        return scale(self, 1 / _frac(other))

    def __rtruediv__(self, other):
        return div(self._coerce(other), self)

    def __pow__(self, k: int):
        if k < 0:
            return div(Series.constant(1, self.order), self ** (-k))
        result = Series.constant(1, self.order)
        base = self
        while k:
            if k & 1:
                result = mul(result, base)
            k >>= 1
            if k:
                base = mul(base, base)
        return result

    def __call__(self, inner: Series) -> Series:
        return compose(self, inner)

    # -- shifts ---------------------------------------------------------
    def shift_up(self, k: int = 1) -> Series:
        """Multiply by ``x**k``; the known order grows by ``k``."""
        return Series([0] * k + list(self._c), self.order + k)

    def shift_down(self, k: int = 1) -> Series:
        """Divide by ``x**k``; the first ``k`` coefficients must vanish."""
        if k > self.order:
            raise TruncationError("series too short to divide by x^%d" % k)
        if any(self._c[:k]):
            raise ValueError(f"series is not divisible by x^{k}")
        return Series(self._c[k:], self.order - k)

    def derivative(self) -> Series:
        return Series([i * v for i, v in enumerate(self._c)][1:], max(self.order - 1, 0))


def coeff(s: Series, n: int) -> Fraction:
    """Coefficient of ``x**n``."""
    if n < 0:
        raise IndexError("negative coefficient index")
    if n >= s.order:
        raise TruncationError(f"coefficient {n} requested from a series of order {s.order}")
    return s.coeffs[n]


def add(a: Series, b: Series) -> Series:
    n = min(a.order, b.order)
    return Series([a.coeffs[i] + b.coeffs[i] for i in range(n)], n)


def sub(a: Series, b: Series) -> Series:
    n = min(a.order, b.order)
    return Series([a.coeffs[i] - b.coeffs[i] for i in range(n)], n)


def scale(a: Series, r) -> Series:
    r = _frac(r)
    return Series([r * v for v in a.coeffs], a.order)


def mul(a: Series, b: Series) -> Series:
    n = min(a.order, b.order)
    ac, bc = a.coeffs, b.coeffs
    out = [Fraction(0)] * n
    for i in range(n):
        ai = ac[i]
        if not ai:
            continue
        for j in range(n - i):
            if bc[j]:
                out[i + j] += ai * bc[j]
    return Series(out, n)


def div(a: Series, b: Series) -> Series:
    """Quotient ``a/b``; ``b`` must have a nonzero constant term."""
    n = min(a.order, b.order)
    if n == 0:
        return Series([], 0)
    b0 = b.coeffs[0]
    if b0 == 0:
        raise ZeroDivisionError("divisor has zero constant term")
    ac, bc = a.coeffs, b.coeffs
    q: list[Fraction] = []
    for i in range(n):
        acc = ac[i]
        for k in range(max(0, i - len(bc) + 1), i):
            if bc[i - k]:
                acc -= q[k] * bc[i - k]
        q.append(acc / b0)
    return Series(q, n)


def compose(a: Series, b: Series) -> Series:
    """``a(b(x))`` by Horner's rule; ``b`` must have zero constant term."""
    if b.order and b.coeffs[0] != 0:
        raise ValueError("inner series must have zero constant term")
    n = min(a.order, b.order)
    if n == 0:
        return Series([], 0)
    b = b.truncate(n)
    result = Series.constant(a.coeffs[n - 1], n)
    for i in range(n - 2, -1, -1):
        result = mul(result, b)
        result = Series((result.coeffs[0] + a.coeffs[i],) + result.coeffs[1:], n)
    return result


def reversion(f: Series) -> Series:
    """Compositional inverse of ``f`` (needs ``f(0) = 0`` and ``f'(0) != 0``).

    Uses Lagrange inversion: ``[x^n] Rev f = [x^(n-1)] (x/f)^n / n``.
    """
    n = f.order
    if n < 2:
        raise TruncationError("reversion needs at least two coefficients")
    if f.coeffs[0] != 0:
        raise ValueError("reversion needs f(0) == 0")
    if f.coeffs[1] == 0:
        raise ValueError("reversion needs f'(0) != 0")
    h = div(Series.constant(1, n - 1), f.shift_down(1))  # x/f, order n-1
    out = [Fraction(0)] * n
    power = Series.constant(1, n - 1)
    for k in range(1, n):
        power = mul(power, h)
        out[k] = power.coeffs[k - 1] / k
    return Series(out, n)


def sqrt1(a: Series) -> Series:
    """Square root of a series with constant term 1, normalised to ``s(0) = 1``."""
    if a.order == 0:
        return Series([], 0)
    if a.coeffs[0] != 1:
        raise ValueError("sqrt1 needs constant term 1")
    s = [Fraction(1)]
    for n in range(1, a.order):
        acc = a.coeffs[n] - sum(s[k] * s[n - k] for k in range(1, n))
        s.append(acc / 2)
    return Series(s, a.order)


def aerate(a: Series, max_order: int | None = None) -> Series:
    """Interleave zeros: the result is ``a(x**2)``.

    The known order doubles, capped at ``max_order`` (default: the larger of
    the global default order and the input order).
    """
    cap = max(default_order(), a.order) if max_order is None else max_order
    n = min(2 * a.order, cap)
    out = [Fraction(0)] * n
    for i in range(0, n, 2):
        out[i] = a.coeffs[i // 2]
    return Series(out, n)


def catalan_gf(order: int | None = None) -> Series:
    """``c(x) = (1 - sqrt(1 - 4x)) / (2x)``."""
    order = default_order() if order is None else order
    root = sqrt1(Series.polynomial([1, -4], order + 1))
    return scale((Series.constant(1, order + 1) - root).shift_down(1), Fraction(1, 2))
