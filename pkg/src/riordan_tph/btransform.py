"""The 𝔹 matrix, the 𝔹-transform of a sequence and the generating function of its image.

``𝔹 = L (1+x, x)^t`` where ``L = ((1-x)/(1+x^2), x/(1+x^2))^{-1}`` has entries
``C(n, floor((n-k)/2))``.  Row ``n`` of 𝔹 has ``n + 2`` nonzero-capable
entries, so the transform of ``a_0..a_n`` yields ``b_0..b_{n-1}``.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb

from .matrix import Matrix, TriMatrix
from .powerseries import Series, aerate, catalan_gf, compose, default_order, div, mul
from .riordan import Riordan, ftra_series, sequence_array, to_matrix
from .sequences import Seq

METHODS = ("matrix", "binomial", "gathered", "catalan", "gf")


def binom(n: int, k: int) -> int:
    """Binomial coefficient, zero outside ``0 <= k <= n``."""
    if k < 0 or n < 0 or k > n:
        return 0
    return comb(n, k)


def zero_pow(k: int) -> int:
    """``0^k = [k == 0]``."""
    return 1 if k == 0 else 0


# -- named Riordan arrays --------------------------------------------------

@lru_cache(maxsize=32)
def _inverse_pair(g_num: tuple, order: int) -> Riordan:
    order = max(order, 2)
    r = Riordan(Series.rational(g_num, [1, 0, 1], order), Series.rational([0, 1], [1, 0, 1], order))
    return r.inverse()


def _order(order):
    return default_order() if order is None else order


def l_array(order: int | None = None) -> Riordan:
    """``L = ((1-x)/(1+x^2), x/(1+x^2))^{-1}``."""
    return _inverse_pair((1, -1), _order(order))


def catalan_aerated_array(order: int | None = None) -> Riordan:
    """``(1/(1+x^2), x/(1+x^2))^{-1} = (c(x^2), x c(x^2))``."""
    return _inverse_pair((1,), _order(order))


def chebyshev_first_array(order: int | None = None) -> Riordan:
    """``((1-x^2)/(1+x^2), x/(1+x^2))^{-1}``."""
    return _inverse_pair((1, 0, -1), _order(order))


def l_matrix(n: int) -> TriMatrix:
    """Closed form ``C(i, floor((i-k)/2))`` of the ``L`` array."""
    return TriMatrix.from_function(n, n, lambda i, k: binom(i, (i - k) // 2) if k <= i else 0)


def catalan_aerated_entry(n: int, k: int) -> Fraction:
    """``C(n+1, (n-k)/2) (k+1)/(n+1)`` for ``n - k`` even, else 0."""
    if k > n or (n - k) % 2:
        return Fraction(0)
    return Fraction(binom(n + 1, (n - k) // 2) * (k + 1), n + 1)


def shift_transpose(nrows: int, ncols: int) -> Matrix:
    """Leading block of ``(1+x, x)^t``: ones on the diagonal and superdiagonal."""
    return Matrix.from_function(nrows, ncols, lambda i, j: int(j == i or j == i + 1))


def t_matrix(n: int) -> Matrix:
    """``𝕋 = (1/(1-x), x) (1+x, x)^t`` with ``n`` rows and ``n + 2`` columns."""
    partial_sums = sequence_array(Series.rational([1], [1, -1], max(n, 2))).matrix(n)
    return partial_sums @ shift_transpose(n, n + 2)


# -- the 𝔹 matrix -----------------------------------------------------------

def b_entry(n: int, k: int) -> int:
    if k < 0 or k > n + 1:
        return 0
    return binom(n, (n - k) // 2) + binom(n, (n - k + 1) // 2) - binom(n, n // 2) * zero_pow(k)


def b_matrix(n: int, route: str = "entry") -> Matrix:
    """Rows ``0..n-1`` of 𝔹 as an ``n x (n+2)`` matrix.

    ``route`` selects how it is built: ``"entry"`` (closed form),
    ``"l_factor"`` (``L (1+x,x)^t``), ``"catalan_t"`` (``(c(x^2), xc(x^2)) 𝕋``)
    or ``"chebyshev"`` (``((1-x^2)/(1+x^2), x/(1+x^2))^{-1} (1+x,x) (1+x,x)^t``).
    """
    ncols = n + 2
    if route == "entry":
        return Matrix.from_function(n, ncols, b_entry)
    upper = shift_transpose(n, ncols)
    order = max(n, 2)
    if route == "l_factor":
        return to_matrix(l_array(order), n) @ upper
    if route == "catalan_t":
        return to_matrix(catalan_aerated_array(order), n) @ t_matrix(n)
    if route == "chebyshev":
        one_plus_x = Riordan(Series.polynomial([1, 1], order), Series.x(order))
        return to_matrix(chebyshev_first_array(order), n) @ to_matrix(one_plus_x, n) @ upper
    raise ValueError(f"unknown route {route!r}")


# -- the transform ----------------------------------------------------------

def _need(a: Seq, n: int) -> None:
    a.require(n + 1, f"{n} terms of the 𝔹-transform")


def transform_matrix(a: Seq, n: int) -> list[Fraction]:
    """``b_m = sum_{k=0}^{m+1} b_{m,k} a_k`` for ``m < n``."""
    _need(a, n)
    return [sum((b_entry(m, k) * a[k] for k in range(m + 2)), Fraction(0)) for m in range(n)]


def transform_binomial(a: Seq, n: int) -> list[Fraction]:
    """``b_m = sum_k C(m, k) (a_{m-2k} + a_{m-2k+1})`` with ``a_{-j} = a_j``."""
    _need(a, n)
    return [sum((binom(m, k) * (a.ext(m - 2 * k) + a.ext(m - 2 * k + 1)) for k in range(m + 1)),
                Fraction(0))
            for m in range(n)]


def transform_gathered(a: Seq, n: int) -> list[Fraction]:
    """Binomial form with the symmetric terms folded together (no negative indices)."""
    _need(a, n)
    out = []
    for m in range(n):
        acc = sum((binom(m, k) * (a[m - 2 * k + 1] + 2 * a[m - 2 * k] + a[m - 2 * k - 1])
                   for k in range((m - 1) // 2 + 1)), Fraction(0))
        if m % 2 == 0:
            acc += binom(m, m // 2) * (a[0] + a[1])
        out.append(acc)
    return out


def t_action(a: Seq, n: int) -> list[Fraction]:
    """``𝕋 a``: ``sum_{j<=m} a_j + sum_{1<=j<=m+1} a_j`` for ``m < n``."""
    _need(a, n)
    out = []
    for m in range(n):
        direct = sum(a[: m + 1], Fraction(0)) + sum(a[1: m + 2], Fraction(0))
        folded = 2 * sum(a[: m + 1], Fraction(0)) + a[m + 1] - a[0]
        if direct != folded:
            raise ArithmeticError("the two forms of the 𝕋 action disagree")
        out.append(direct)
    return out


def transform_catalan(a: Seq, n: int) -> list[Fraction]:
    """Aerated-Catalan weights applied to the 𝕋 action of ``a``; both displayed variants are checked."""
    _need(a, n)
    prefix = [Fraction(0)]
    for t in a[: n + 1]:
        prefix.append(prefix[-1] + t)
    out = []
    for m in range(n):
        first = second = Fraction(0)
        for k in range(m + 1):
            w = catalan_aerated_entry(m, k)
            if not w:
                continue
            first += w * (prefix[k + 1] + prefix[k + 2] - prefix[1])
            second += w * (2 * prefix[k + 1] + a[k + 1] - a[0])
        if first != second:
            raise ArithmeticError("Catalan-weighted variants disagree")
        out.append(first)
    return out


def transform(a: Seq, n: int, method: str = "matrix") -> list[Fraction]:
    if method == "matrix":
        return transform_matrix(a, n)
    if method == "binomial":
        return transform_binomial(a, n)
    if method == "gathered":
        return transform_gathered(a, n)
    if method == "catalan":
        return transform_catalan(a, n)
    if method == "gf":
        _need(a, n)
        return list(image_gf(a.gf(n + 1), a[0], n).coeffs)
    raise ValueError(f"unknown method {method!r}; expected one of {', '.join(METHODS)}")


def jacobsthal_image(n: int) -> list[int]:
    """``sum_k C(m, floor((m-k)/2)) 2^k`` for ``m < n``."""
    return [sum(binom(m, (m - k) // 2) * 2**k for k in range(m + 1)) for m in range(n)]


# -- generating function of the image --------------------------------------

def _rise(f: Series, a0) -> Series:
    """``((1+x) f(x) - a_0) / x``."""
    one_plus_x = Series.polynomial([1, 1], f.order)
    return (mul(one_plus_x, f) - a0).shift_down(1)


def image_gf_routes(f: Series, a0=None, order: int | None = None) -> dict[str, Series]:
    """The image generating function computed three independent ways.

    ``"fundamental"``: ``((1 + X) f(X) - a_0) / (x (1 - X))`` with ``X = x c(x^2)``;
    ``"catalan"``: ``(c(x^2), xc(x^2))`` acting on ``((1+x) f - a_0) / (x (1-x))``;
    ``"l_array"``: ``L`` acting on ``((1+x) f - a_0) / x``.
    """
    if a0 is None:
        a0 = f.coeffs[0]
    if Fraction(a0) != f.coeffs[0]:
        raise ValueError("a0 must equal the constant term of f")
    n = f.order - 1 if order is None else order
    if n > f.order - 1:
        raise ValueError(f"f known to order {f.order}; the image is known to order {f.order - 1}")
    f = f.truncate(n + 1)
    big = n + 1

    X = aerate(catalan_gf(big // 2 + 1), big).shift_up(1).truncate(big)
    one = Series.constant(1, big)
    num = mul(one + X, compose(f, X)) - a0
    fundamental = div(num.shift_down(1), (one - X).truncate(n))

    rise = _rise(f, a0)
    catalan = ftra_series(catalan_aerated_array(n), div(rise, Series.polynomial([1, -1], n)))
    via_l = ftra_series(l_array(n), rise)
    return {"fundamental": fundamental, "catalan": catalan, "l_array": via_l}


def image_gf(f: Series, a0=None, order: int | None = None, check: bool = True) -> Series:
    """Generating function of the 𝔹-transform of the sequence with g.f. ``f``.

    The result is known to order ``f.order - 1`` (or ``order`` if smaller).
    With ``check`` the three constructions are compared exactly.
    """
    routes = image_gf_routes(f, a0, order)
    result = routes["fundamental"]
    if check:
        for name, s in routes.items():
            if s != result:
                raise ArithmeticError(f"image g.f. route {name!r} disagrees")
    return result
