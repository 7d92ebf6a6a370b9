#!/usr/bin/env python
# -*- coding utf-8 -*-

"""
Q(x, y): field laws, derivations, structure queries and printing
"""

from fractions import Fraction

import pytest
from hypothesis import HealthCheck, assume, given, settings
from hypothesis import strategies as st

from ARFinsler.core.algebra.RatField import NOT_HOMOGENEOUS, rational_function_field
from ARFinsler.core.io.ARExceptions import DivisionByZero, ZeroInput
from ARFinsler.core.io.SpecFile import parse_expression

rf = rational_function_field(2)
x1, x2 = rf.x
y1, y2 = rf.y

SLOW = settings(max_examples=25, deadline=None, suppress_health_check=[HealthCheck.too_slow])

monomials = st.tuples(
    st.integers(-3, 3), st.integers(0, 2), st.integers(0, 1), st.integers(0, 2), st.integers(0, 2)
)


@st.composite
def polynomials(draw):
    f = rf.zero
    for c, a, b, d, e in draw(st.lists(monomials, min_size=1, max_size=4)):
        f += rf.const(c) * x1**a * x2**b * y1**d * y2**e
    return f


@st.composite
def fractions(draw):
    num = draw(polynomials())
    den = draw(polynomials())
    assume(den)
    return num / den


@SLOW
@given(fractions(), fractions(), fractions())
def test_field_laws(a, b, c):
    assert rf.add(rf.add(a, b), c) == rf.add(a, rf.add(b, c))
    assert rf.mul(a, rf.add(b, c)) == rf.add(rf.mul(a, b), rf.mul(a, c))
    assert rf.add(a, rf.neg(a)) == rf.zero
    if a:
        assert rf.mul(a, rf.inv(a)) == rf.one


@SLOW
@given(fractions(), fractions(), st.sampled_from(["x1", "x2", "y1", "y2"]))
def test_leibniz_rule(a, b, var):
    lhs = rf.pdiff(a * b, var)
    rhs = rf.pdiff(a, var) * b + a * rf.pdiff(b, var)
    assert lhs == rhs


@SLOW
@given(polynomials(), polynomials())
def test_evaluation_is_a_homomorphism(p, q):
    xs, ys = (Fraction(1, 2), Fraction(2, 3)), (Fraction(3), Fraction(-1, 5))
    assert rf.evaluate(p * q, xs, ys) == rf.evaluate(p, xs, ys) * rf.evaluate(q, xs, ys)
    assert rf.evaluate(p + q, xs, ys) == rf.evaluate(p, xs, ys) + rf.evaluate(q, xs, ys)


@SLOW
@given(fractions())
def test_render_parses_back(f):
    assert parse_expression(rf.render(f), rf) == f


def test_inverse_of_zero():
    with pytest.raises(DivisionByZero):
        rf.inv(0)


def test_evaluate_at_a_pole():
    with pytest.raises(DivisionByZero):
        rf.evaluate(1 / (x1 - 1), (1, 0), (1, 1))


@pytest.mark.parametrize(
    "text, degree",
    [
        ("y1^2/x1", 2),
        ("y1/y2", 0),
        ("(1 + x1^2)*y1*y2^2", 3),
        ("y1^2/(y1 + y2)^3", -1),
    ],
)
def test_y_homogeneity_degree(text, degree):
    assert rf.y_homogeneity_degree(parse_expression(text, rf)) == degree


def test_not_homogeneous():
    assert rf.y_homogeneity_degree(y1 + x1) is NOT_HOMOGENEOUS
    with pytest.raises(ZeroInput):
        rf.y_homogeneity_degree(rf.zero)


def test_x_and_y_free():
    assert rf.is_y_free(x1 / (1 + x2**2))
    assert not rf.is_y_free(x1 * y1)
    assert rf.is_x_free(y1 / y2)
    assert rf.is_constant(rf.const(Fraction(3, 7)))
    assert rf.constant_value(rf.const(Fraction(3, 7))) == Fraction(3, 7)


@pytest.mark.parametrize(
    "text, square",
    [
        ("(x1 + y1)^2", True),
        ("(x1 + y1)^2/y2^4", True),
        ("4/9*y1^2*y2^2", True),
        ("2*(x1 + y1)^2", False),
        ("-y1^2", False),
        ("y1^2 + y2^2", False),
        ("0", True),
    ],
)
def test_perfect_square(text, square):
    assert rf.is_perfect_square(parse_expression(text, rf)) is square


def test_render_is_canonical():
    assert rf.render((3 * y1) / (3 * x1)) == "(y1)/(x1)"
    assert rf.render((2 * y1) / (4 * x1)) == "(1/2*y1)/(x1)"
    assert rf.render(rf.const(Fraction(-3, 2))) == "-3/2"
    assert rf.render(x1 * y2**2 - y1) == rf.render(-y1 + y2**2 * x1)


def test_shared_instance():
    assert rational_function_field(2) is rf
    with pytest.raises(ValueError):
        rf.var("z1")


def test_polynomial_gcd_is_monic():
    p = (2 * (x1 + y1) * (y2 - 1)).numer
    q = (3 * (x1 + y1) * (y1 + y2)).numer
    assert rf.gcd(p, q) == (x1 + y1).numer
    assert rf.gcd(p, rf.ring.zero) == ((x1 + y1) * (y2 - 1)).numer
    assert rf.gcd(rf.ring.zero, rf.ring.zero) == rf.ring.zero
