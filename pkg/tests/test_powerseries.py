from fractions import Fraction
from math import comb

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from riordan_tph.powerseries import (Series, TruncationError, add, aerate, catalan_gf, coeff,
                                     compose, div, mul, reversion, scale, sqrt1, sub)

N = 12
X = Series.x(N)
ONE = Series.constant(1, N)

small = st.integers(-6, 6)


def series_st(order=8, const=None):
    if const is None:
        return st.lists(small, min_size=order, max_size=order).map(lambda c: Series(c, order))
    return st.lists(small, min_size=order - 1, max_size=order - 1).map(
        lambda c: Series([const] + c, order))


def catalan_numbers(n):
    return [comb(2 * k, k) // (k + 1) for k in range(n)]


# -- coeff ------------------------------------------------------------------

def test_coeff_fibonacci():
    assert coeff(X / (1 - X - X * X), 6) == 8


def test_coeff_constant():
    one = Series.constant(1, 8)
    assert coeff(one, 0) == 1
    assert coeff(one, 5) == 0


def test_coeff_catalan():
    assert coeff(catalan_gf(8), 5) == 42


def test_coeff_beyond_order_raises():
    with pytest.raises(TruncationError):
        coeff(Series([1, 2, 3]), 3)


# -- add / sub / scale --------------------------------------------------------

def test_add_sub_scale():
    assert add(1 + X, 1 - X) == Series.constant(2, N)
    assert scale(catalan_gf(N), 0) == Series.constant(0, N)
    s = catalan_gf(N)
    assert sub(s, s) == Series.constant(0, N)


def test_binary_ops_take_min_order():
    a = Series([1, 2, 3, 4])
    b = Series([1, 1])
    assert add(a, b).order == 2
    assert mul(a, b).order == 2


# -- mul ----------------------------------------------------------------------

def test_mul_examples():
    assert mul(1 + X, 1 - X) == Series([1, 0, -1], N)
    s = Series([3, 1, 4, 1, 5], 5)
    assert mul(s, Series.constant(1, 5)) == s


def test_catalan_convolution_matches_brute_force():
    n = 15
    cat = catalan_numbers(n + 1)
    # brute-force [x^m] x c(x)^2 = sum_{k} C_k C_{m-1-k}
    brute = [0] + [sum(cat[k] * cat[m - 1 - k] for k in range(m)) for m in range(1, n)]
    c = catalan_gf(n)
    assert list(mul(Series.x(n), mul(c, c)).coeffs) == brute
    assert mul(Series.x(n), mul(c, c)) == c - 1


# -- div ----------------------------------------------------------------------

def test_div_examples():
    assert div(ONE, 1 - X) == Series([1] * N, N)
    assert list(div(X, 1 - X - X * X).coeffs[:7]) == [0, 1, 1, 2, 3, 5, 8]
    assert div(1 - X * X, 1 - X) == 1 + X


def test_div_zero_constant_raises():
    with pytest.raises(ZeroDivisionError):
        div(ONE, X)


# -- compose ------------------------------------------------------------------

def test_compose_geometric_into_binomial_row_sums():
    # 1/(1 - x/(1-x)) = (1-x)/(1-2x); the extra factor g = 1/(1-x) gives the row sums
    s = compose(div(ONE, 1 - X), div(X, 1 - X))
    assert list(s.coeffs) == [1] + [2 ** (n - 1) for n in range(1, N)]
    row_sums = [sum(comb(n, k) for k in range(n + 1)) for n in range(N)]
    assert list(div(s, 1 - X).coeffs) == row_sums


def test_compose_identity_and_inverse_pair():
    s = Series([2, -1, 3, 0, 5, 7], 6)
    assert compose(s, Series.x(6)) == s
    assert compose(div(X, 1 - X), div(X, 1 + X)) == X


def test_compose_needs_zero_constant():
    with pytest.raises(ValueError):
        compose(X, 1 + X)


# -- reversion ----------------------------------------------------------------

def test_reversion_examples():
    f = div(X, 1 - X)
    r = reversion(f)
    assert list(r.coeffs) == [0] + [(-1) ** (k + 1) for k in range(1, N)]
    assert compose(f, r) == X
    assert reversion(X) == X
    aerated_cat = reversion(div(X, 1 + X * X))
    assert list(aerated_cat.coeffs[:8]) == [0, 1, 0, 1, 0, 2, 0, 5]


def test_reversion_preconditions():
    with pytest.raises(ValueError):
        reversion(1 + X)
    with pytest.raises(ValueError):
        reversion(X * X)


# -- sqrt1 --------------------------------------------------------------------

def test_sqrt1_examples():
    assert sqrt1(ONE) == ONE
    c = (1 - sqrt1(Series.polynomial([1, -4], N + 1))).shift_down(1) / 2
    assert list(c.coeffs[:6]) == [1, 1, 2, 5, 14, 42]
    assert sqrt1(mul(1 + X, 1 + X)) == 1 + X


def test_sqrt1_needs_unit_constant():
    with pytest.raises(ValueError):
        sqrt1(Series([2, 1]))


# -- aerate -------------------------------------------------------------------

def test_aerate_examples():
    assert list(aerate(Series([1, 1, 2, 5])).coeffs) == [1, 0, 1, 0, 2, 0, 5, 0]
    assert aerate(Series.constant(0, 4)) == Series.constant(0, 8)
    a = aerate(div(ONE, 1 - X))
    assert list(a.coeffs) == [1 if i % 2 == 0 else 0 for i in range(2 * N)]
    assert a == div(Series.constant(1, 2 * N), Series.polynomial([1, 0, -1], 2 * N))


def test_aerate_order_cap():
    assert aerate(Series([1, 2, 3]), max_order=5).order == 5


# -- properties -----------------------------------------------------------------

@given(series_st(), series_st(), series_st())
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a


@given(series_st(), series_st(const=1))
def test_div_mul_roundtrip(a, b):
    assert mul(div(a, b), b) == a


@given(st.lists(small, min_size=7, max_size=7))
def test_reversion_involution(tail):
    f = Series([0, 1] + tail, 9)
    r = reversion(f)
    assert reversion(r) == f
    assert compose(f, r) == Series.x(9)
    assert compose(r, f) == Series.x(9)


@given(series_st(const=1))
def test_sqrt1_squares_back(a):
    s = sqrt1(a)
    assert mul(s, s) == a


@given(st.lists(st.integers(-3, 3), min_size=2, max_size=2))
def test_scalar_coefficients_stay_exact(pair):
    p, q = pair
    assume(q != 0)
    s = Series([Fraction(p, q), 1], 2) * Fraction(q, 1)
    assert s.coeffs[0] == p


def test_catalan_functional_equation():
    c = catalan_gf(30)
    assert c == 1 + Series.x(30) * c * c


def test_equality_is_truncation_aware():
    assert Series([1, 2, 3]) == Series([1, 2])
    assert Series([1, 2, 3]) != Series([1, 3])
