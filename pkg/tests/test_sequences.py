from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from riordan_tph.powerseries import Series, div
from riordan_tph.sequences import (catalan, catalan_seq, delta_seq, fibonacci, fibonacci_seq,
                                   from_gf, from_list, gen_r, jacobsthal, jacobsthal_seq)


def test_fibonacci():
    assert fibonacci(0) == 0
    assert [fibonacci(n) for n in range(1, 7)] == [1, 1, 2, 3, 5, 8]
    assert fibonacci_seq(10).ext(-3) == 2


def test_jacobsthal():
    # recurrence oracle J_n = J_{n-1} + 2 J_{n-2}
    J = [0, 1]
    for n in range(2, 30):
        J.append(J[-1] + 2 * J[-2])
    assert [jacobsthal(n) for n in range(30)] == J
    assert [jacobsthal(n) for n in range(6)] == [0, 1, 1, 3, 5, 11]
    assert [gen_r(n, 2) for n in range(30)] == J


def test_gen_r():
    assert all(gen_r(n, 1) == fibonacci(n) for n in range(21))
    assert gen_r(0, 7) == 0
    x = Series.x(8)
    series = div(x, 1 - x - 2 * x * x)
    assert gen_r(5, 2) == series[5] == 11


@pytest.mark.parametrize("r", range(6))
def test_gen_r_identity(r):
    x = Series.x(31)
    series = div(x, 1 - x - r * x * x)
    assert [gen_r(n, r) for n in range(31)] == list(series.coeffs)


def test_catalan_and_accessors():
    assert [catalan(n) for n in range(6)] == [1, 1, 2, 5, 14, 42]
    assert from_list([7, 3, 9]).ext(-2) == 9
    x = Series.x(20)
    assert list(from_gf(div(x, 1 - x - x * x)).terms) == [fibonacci(n) for n in range(20)]
    assert list(catalan_seq(6)) == [1, 1, 2, 5, 14, 42]


def test_zero_power_convention():
    assert list(delta_seq(5)) == [1, 0, 0, 0, 0]


def test_index_errors():
    s = from_list([1, 2, 3])
    with pytest.raises(IndexError):
        s.term(-1)
    with pytest.raises(IndexError):
        s.ext(3)
    with pytest.raises(IndexError):
        s.term(3)


@given(st.lists(st.integers(-50, 50), min_size=1, max_size=20), st.data())
def test_ext_is_symmetric(values, data):
    s = from_list(values)
    i = data.draw(st.integers(0, len(values) - 1))
    assert s.ext(i) == s.ext(-i) == Fraction(values[i])


def test_builtins_are_integers():
    assert fibonacci_seq(40).is_integral()
    assert jacobsthal_seq(40).is_integral()
