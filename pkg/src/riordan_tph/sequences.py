"""Integer sequences used throughout, and the symmetric extension ``a_{-n} = a_n``."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Iterable

from .powerseries import Series, default_order


def _linear(n: int, a0: int, a1: int, p: int, q: int) -> int:
    """``u_n`` for ``u_n = p u_{n-1} + q u_{n-2}``."""
    if n < 0:
        raise ValueError("index must be non-negative")
    u, v = a0, a1
    for _ in range(n):
        u, v = v, p * v + q * u
    return u


def fibonacci(n: int) -> int:
    return _linear(n, 0, 1, 1, 1)


def jacobsthal(n: int) -> int:
    value = _linear(n, 0, 1, 1, 2)
    closed = (2**n - (-1) ** n) // 3
    if value != closed:
        raise ArithmeticError(f"Jacobsthal recurrence and closed form disagree at n={n}")
    return value


def gen_r(n: int, r: int) -> int:
    """``[x^n] x/(1 - x - r x^2)``, checked against its binomial sum."""
    value = _linear(n, 0, 1, 1, r)
    binomial = sum(comb(n - k - 1, k) * r**k for k in range((n - 1) // 2 + 1)) if n > 0 else 0
    if value != binomial:
        raise ArithmeticError(f"gen_r recurrence and binomial sum disagree at n={n}, r={r}")
    return value


def catalan(n: int) -> int:
    if n < 0:
        raise ValueError("index must be non-negative")
    c = 1
    for k in range(n):
        c = c * 2 * (2 * k + 1) // (k + 2)
    return c


@dataclass(frozen=True)
class Seq:
    """A finite prefix ``a_0, ..., a_{len-1}`` of a sequence."""

    terms: tuple[Fraction, ...]
    name: str = ""
    source: Series | None = field(default=None, compare=False, repr=False)

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms)

    def term(self, n: int) -> Fraction:
        if n < 0:
            raise IndexError("term() takes non-negative indices; use ext() for signed access")
        if n >= len(self.terms):
            raise IndexError(f"{self.name or 'sequence'} has {len(self.terms)} terms, asked for a_{n}")
        return self.terms[n]

    def __getitem__(self, n):
        if isinstance(n, slice):
            return self.terms[n]
        return self.term(n)

    def ext(self, i: int) -> Fraction:
        """Symmetric extension ``a_{-i} = a_i``."""
        return self.term(abs(i))

    def gf(self, order: int | None = None) -> Series:
        """Generating function, truncated to the available terms."""
        if self.source is not None and (order is None or order <= self.source.order):
            return self.source if order is None else self.source.truncate(order)
        n = len(self.terms) if order is None else order
        if n > len(self.terms):
            raise IndexError(f"only {len(self.terms)} terms available, order {n} requested")
        return Series(self.terms[:n], n)

    def require(self, n: int, why: str = "") -> None:
        if len(self.terms) < n:
            raise IndexError(f"need {n} terms{' for ' + why if why else ''}, "
                             f"{self.name or 'sequence'} has {len(self.terms)}")

    def is_integral(self) -> bool:
        return all(t.denominator == 1 for t in self.terms)


def from_list(values: Iterable, name: str = "") -> Seq:
    return Seq(tuple(Fraction(v) for v in values), name)


def from_gf(s: Series, name: str = "") -> Seq:
    return Seq(tuple(s.coeffs), name, s)


def _builtin(fn, length: int | None, name: str) -> Seq:
    length = default_order() if length is None else length
    return Seq(tuple(Fraction(fn(n)) for n in range(length)), name)


def fibonacci_seq(length: int | None = None) -> Seq:
    return _builtin(fibonacci, length, "fib")


def jacobsthal_seq(length: int | None = None) -> Seq:
    return _builtin(jacobsthal, length, "jac")


def gen_r_seq(r: int, length: int | None = None) -> Seq:
    return _builtin(lambda n: gen_r(n, r), length, f"genr:{r}")


def catalan_seq(length: int | None = None) -> Seq:
    return _builtin(catalan, length, "catalan")


def delta_seq(length: int | None = None) -> Seq:
    """``0^n``: the sequence 1, 0, 0, ..."""
    return _builtin(lambda n: int(n == 0), length, "delta")
