from fractions import Fraction

import pytest
from hypothesis import assume, given, strategies as st

from conftest import small_rationals
from simplexint.errors import ExpressionSyntaxError, FormalDegreeExceeded
from simplexint.polynomial import (
    LinearForm,
    SparsePolynomial,
    detect_power_of_linear_form,
    effective_variables,
    evaluate_linear_form,
)
from simplexint.slp import (
    Constant,
    Product,
    Sum,
    Variable,
    evaluate,
    expand_slp,
    formal_degree,
    from_polynomial,
    parse_expression,
    render,
)

N = 3


def poly(nvars, terms):
    return SparsePolynomial(nvars, terms)


# -- parser -------------------------------------------------------------------


def test_parse_sum_of_squares():
    e = parse_expression("((x1*x1)+(x2*x2))", 2)
    assert e == Sum(Product(Variable(1), Variable(1)), Product(Variable(2), Variable(2)))


def test_parse_rational_constant():
    assert parse_expression("(3/2*x1)", 1) == Product(Constant(Fraction(3, 2)), Variable(1))


def test_parse_whitespace_is_ignored():
    assert parse_expression(" ( x1 +\n-2/4 ) ", 1) == Sum(Variable(1), Constant(Fraction(-1, 2)))


def test_syntax_error_offset():
    with pytest.raises(ExpressionSyntaxError) as info:
        parse_expression("(x1+)", 1)
    assert info.value.position == 4
    assert "offset 4" in str(info.value)


@pytest.mark.parametrize("text", ["(x3+x1)", "x0", "(1/0*x1)", "(x1+x2", "x1 x2", "(x1-x2)", "((x1+x2))", ""])
def test_parse_rejects(text):
    with pytest.raises((ExpressionSyntaxError, ZeroDivisionError, ValueError)):
        parse_expression(text, 2)


def test_deep_expression_does_not_hit_recursion_limit():
    text = "x1"
    for _ in range(3000):
        text = f"({text}+1)"
    e = parse_expression(text, 1)
    assert formal_degree(e) == 1
    assert evaluate(e, [0]) == 3000
    assert render(e) == text


# -- formal degree and expansion --------------------------------------------


def test_formal_degree_examples():
    assert formal_degree(Constant(Fraction(5))) == 0
    x1 = Variable(1)
    one = Constant(Fraction(1))
    assert formal_degree(Product(Sum(x1, one), Sum(x1, one))) == 2
    assert formal_degree(Product(Sum(Product(x1, x1), x1), x1)) == 3


def test_expand_examples():
    assert expand_slp(parse_expression("((x1*x1)+(x2*x2))", 2), 2, 2) == poly(2, {(2, 0): 1, (0, 2): 1})
    assert expand_slp(parse_expression("((x1+x2)*(x1+x2))", 2), 2, 2) == poly(2, {(2, 0): 1, (1, 1): 2, (0, 2): 1})
    with pytest.raises(FormalDegreeExceeded):
        expand_slp(parse_expression("((x1*x1)*x1)", 1), 2, 1)


def test_formal_degree_can_exceed_true_degree():
    e = parse_expression("((x1*x1)+(-1*(x1*x1)))", 1)
    assert formal_degree(e) == 2
    assert expand_slp(e, 2, 1).is_zero()


leaves = st.one_of(
    st.builds(Constant, st.fractions(min_value=-5, max_value=5, max_denominator=4)),
    st.builds(Variable, st.integers(1, N)),
)
expressions = st.recursive(
    leaves, lambda kids: st.one_of(st.builds(Sum, kids, kids), st.builds(Product, kids, kids)), max_leaves=12
)
points = st.lists(small_rationals, min_size=N, max_size=N)


@given(expressions, points)
def test_expansion_agrees_with_evaluation(e, v):
    deg = formal_degree(e)
    f = expand_slp(e, deg, N)
    assert f(v) == evaluate(e, v)
    assert f.degree <= deg


@given(expressions)
def test_render_parse_round_trip(e):
    assert parse_expression(render(e), N) == e


# -- sparse polynomials -----------------------------------------------------

sparse_polys = st.dictionaries(
    st.tuples(*[st.integers(0, 3)] * N), st.fractions(min_value=-9, max_value=9, max_denominator=5), max_size=6
).map(lambda d: SparsePolynomial(N, d))


def test_zero_coefficients_are_dropped():
    f = poly(2, {(1, 0): 0, (0, 1): 2})
    assert len(f) == 1
    assert f.degree == 1
    assert poly(2, {}).degree == -1


@given(sparse_polys, sparse_polys, sparse_polys)
def test_ring_axioms(f, g, h):
    assert (f + g) + h == f + (g + h)
    assert f * (g + h) == f * g + f * h
    assert f * g == g * f
    assert (f - f).is_zero()


@given(sparse_polys, sparse_polys, points)
def test_evaluation_is_a_homomorphism(f, g, v):
    assert (f * g)(v) == f(v) * g(v)
    assert (f + g)(v) == f(v) + g(v)


@given(sparse_polys)
def test_json_round_trip(f):
    assert SparsePolynomial.from_json(f.to_json(), N) == f


@given(sparse_polys)
def test_slp_encoding_round_trip(f):
    e = from_polynomial(f)
    assert expand_slp(e, formal_degree(e), N) == f


def test_effective_variables():
    e = [0] * 8
    e[2], e[6] = 2, 1
    assert effective_variables(e) == [3, 7]
    assert effective_variables((0, 0)) == []
    assert effective_variables((1, 1, 1)) == [1, 2, 3]


def test_linear_form_evaluation():
    assert evaluate_linear_form(LinearForm([1, 2]), [0, 1]) == 2
    assert evaluate_linear_form(LinearForm([0, 0, 0]), [5, -1, 2]) == 0
    assert evaluate_linear_form(LinearForm([Fraction(1, 2), Fraction(1, 3)]), [2, 3]) == 2
    with pytest.raises(ValueError):
        evaluate_linear_form(LinearForm([1, 2]), [1])


def test_detect_power_examples():
    assert detect_power_of_linear_form(poly(2, {(2, 0): 1, (1, 1): 2, (0, 2): 1})) == (LinearForm([1, 1]), 2)
    assert detect_power_of_linear_form(poly(2, {(2, 0): 1, (0, 2): 1})) is None
    assert detect_power_of_linear_form(poly(1, {(3,): 8})) == (LinearForm([2]), 3)
    assert detect_power_of_linear_form(poly(2, {(1, 0): 1, (0, 0): 1})) is None
    with pytest.raises(ValueError):
        detect_power_of_linear_form(poly(2, {}))


def test_detect_power_even_sign_normalized_odd_sign_forced():
    lin = LinearForm([-1, 2])
    form, M = detect_power_of_linear_form(SparsePolynomial.linear_power(lin, 2))
    assert (form, M) == (LinearForm([1, -2]), 2)
    form, M = detect_power_of_linear_form(SparsePolynomial.linear_power(lin, 3))
    assert (form, M) == (lin, 3)


forms = st.lists(st.fractions(min_value=-4, max_value=4, max_denominator=3), min_size=N, max_size=N)


@given(forms, st.integers(1, 8))
def test_detect_power_round_trip(coeffs, M):
    assume(any(coeffs))
    f = SparsePolynomial.linear_power(LinearForm(coeffs), M)
    found = detect_power_of_linear_form(f)
    assert found is not None
    form, m = found
    assert m == M
    assert SparsePolynomial.linear_power(form, m) == f
    if M % 2 == 0:
        assert next(c for c in form.coefficients if c) > 0


@given(sparse_polys)
def test_detect_power_never_returns_a_wrong_pair(f):
    assume(not f.is_zero())
    found = detect_power_of_linear_form(f)
    if found is not None:
        assert SparsePolynomial.linear_power(*found) == f


def test_homogeneous_components():
    f = poly(2, {(0, 0): 3, (1, 0): 1, (1, 1): 2, (0, 2): -1})
    parts = f.homogeneous_components()
    assert sorted(parts) == [0, 1, 2]
    assert sum(parts.values(), poly(2, {})) == f
    assert not f.is_homogeneous() and parts[2].is_homogeneous()
