import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from conftest import nonzero_rationals, small_rationals
from simplexint.arith import (
    binomial,
    compositions,
    count_compositions,
    factorial,
    format_rational,
    moebius,
    multinomial,
    parse_rational,
    rational_root,
    to_rational,
)
from simplexint.integrate import count_primitive_forms


def test_factorial_values():
    assert factorial(0) == 1
    assert factorial(5) == 120
    prod = 1
    for k in range(1, 21):
        prod *= k
    assert factorial(20) == prod == 2432902008176640000


def test_factorial_rejects_negative():
    with pytest.raises(ValueError):
        factorial(-1)


def test_binomial_values():
    assert binomial(4, 2) == 6
    assert binomial(3, 5) == 0
    assert binomial(3 + 5, 3) == 56


def pascal(a, b):
    row = [1]
    for _ in range(a):
        row = [x + y for x, y in zip([0] + row, row + [0])]
    return row[b] if b <= a else 0


@given(st.integers(0, 30), st.integers(0, 35))
def test_binomial_matches_pascal(a, b):
    assert binomial(a, b) == pascal(a, b)


def test_moebius_values():
    assert moebius(1) == 1
    assert moebius(6) == 1
    assert moebius(12) == 0
    assert [moebius(k) for k in range(1, 11)] == [1, -1, -1, 0, -1, 1, -1, 0, 0, 1]


@given(st.integers(1, 500))
def test_moebius_divisor_sum(n):
    assert sum(moebius(d) for d in range(1, n + 1) if n % d == 0) == (1 if n == 1 else 0)


def test_compositions_examples():
    assert list(compositions(2, 2)) == [(0, 2), (1, 1), (2, 0)]
    assert list(compositions(0, 3)) == [(0, 0, 0)]
    assert sum(1 for _ in compositions(10, 4)) == 286 == count_compositions(10, 4)


@given(st.integers(0, 8), st.integers(1, 4))
def test_compositions_complete_and_distinct(total, parts):
    items = list(compositions(total, parts))
    assert len(items) == len(set(items)) == binomial(total + parts - 1, parts - 1)
    assert all(sum(k) == total and len(k) == parts and min(k) >= 0 for k in items)
    assert items == sorted(items)


def test_multinomial():
    assert multinomial([2, 1, 1]) == 12
    assert multinomial([]) == 1


@given(small_rationals, small_rationals, small_rationals)
def test_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a and a * b == b * a


@given(nonzero_rationals)
def test_multiplicative_inverse(a):
    assert a * (1 / a) == 1


@given(small_rationals)
def test_rational_wire_format_round_trip(q):
    text = format_rational(q)
    assert parse_rational(text) == q
    assert ("/" in text) == (q.denominator != 1)
    assert not text.startswith("+")


def test_rational_parsing():
    assert parse_rational("-3/6") == Fraction(-1, 2)
    assert str(parse_rational("-3/6")) == "-1/2"
    assert format_rational(Fraction(4, 2)) == "2"
    with pytest.raises(ZeroDivisionError):
        parse_rational("1/0")
    with pytest.raises(ValueError):
        parse_rational("1.5")
    with pytest.raises(TypeError):
        to_rational(0.5)
    with pytest.raises(TypeError):
        to_rational(True)


def test_rational_root():
    assert rational_root(Fraction(8, 27), 3) == Fraction(2, 3)
    assert rational_root(Fraction(-8), 3) == -2
    assert rational_root(Fraction(2), 2) is None
    assert rational_root(Fraction(-4), 2) is None
    assert rational_root(Fraction(9, 4), 2) == Fraction(3, 2)


@pytest.mark.parametrize("n", range(1, 11))
def test_moebius_inversion_reconstructs_g(n):
    # every nonzero p with |p| <= M is g * (primitive p') for a unique g, so
    # G(n, M) = sum_g F(n, M // g) = C(n+M, n) - 1
    for M in range(1, 11):
        assert sum(count_primitive_forms(n, M // g) for g in range(1, M + 1)) == math.comb(n + M, n) - 1
