#!/usr/bin/env python
# -*- coding utf-8 -*-

"""
Jets and the numeric cross-check
"""

from fractions import Fraction

import mpmath
import pytest

from ARFinsler.core.io.ARExceptions import DivisionByZero
from ARFinsler.oracle.Jet import Jet, inverse, variables
from ARFinsler.oracle.Oracle import (
    ORACLE_OBJECTS,
    ORDER,
    cross_check,
    geodesic_residual,
    jet_function,
    numeric_tensors,
    relative_error,
    symbolic_values,
)

POINTS = [
    ((Fraction(1, 2), Fraction(1, 3)), (Fraction(1), Fraction(3, 2))),
    ((Fraction(3, 4), Fraction(1, 8)), (Fraction(2), Fraction(1, 2))),
]


def close(a, b, eps="1e-25"):
    return abs(mpmath.mpf(a) - mpmath.mpf(b)) <= mpmath.mpf(eps)


def test_product_derivatives():
    x, y = variables([1, 2], order=2)
    f = x * y**2
    assert f.value == 4
    assert f.derivative((1, 0)) == 4
    assert f.derivative((0, 1)) == 4
    assert f.derivative((1, 1)) == 4
    assert f.derivative((0, 2)) == 2
    with pytest.raises(ValueError):
        f.derivative((2, 1))


def test_square_root_series():
    with mpmath.workdps(40):
        (x,) = variables([4], order=3)
        r = x ** Fraction(1, 2)
        assert close(r.value, 2)
        assert close(r.derivative((1,)), mpmath.mpf(1) / 4)
        assert close(r.derivative((2,)), -mpmath.mpf(1) / 32)
        assert close(r.derivative((3,)), mpmath.mpf(3) / 256)


def test_reciprocal_and_division():
    with mpmath.workdps(40):
        (x,) = variables([2], order=2)
        inv = 1 / x
        assert close(inv.value, mpmath.mpf(1) / 2)
        assert close(inv.derivative((1,)), -mpmath.mpf(1) / 4)
        assert close(inv.derivative((2,)), mpmath.mpf(1) / 4)
        assert close((x / x).derivative((1,)), 0)


def test_diff_lowers_order():
    x, y = variables([1, 2], order=3)
    f = x**2 * y
    fx = f.diff(0)
    assert fx.order == 2
    assert fx.value == 4
    assert fx.derivative((0, 1)) == 2


def test_power_errors():
    (x,) = variables([0], order=2)
    with pytest.raises(DivisionByZero):
        x**-1
    (z,) = variables([-1], order=2)
    with pytest.raises(ValueError):
        z ** Fraction(1, 3)
    with pytest.raises(DivisionByZero):
        z / 0


def test_jet_matrix_inverse():
    with mpmath.workdps(40):
        x, y = variables([2, 3], order=2)
        zero = Jet.constant(2, 2, 0)
        rows = [[x, x * y], [zero, y]]
        inv = inverse(rows)
        for i in range(2):
            for j in range(2):
                entry = sum((rows[i][k] * inv[k][j] for k in range(2)), zero)
                assert close(entry.value, 1 if i == j else 0)
                assert close(entry.derivative((1, 0)), 0)
                assert close(entry.derivative((0, 1)), 0)
                assert close(entry.derivative((1, 1)), 0)


def test_numeric_tensors_match_symbolic(sessions):
    session = sessions("riemann_diag")
    with mpmath.workdps(40):
        numeric = numeric_tensors(jet_function(session.F2), POINTS[0])
        symbolic = symbolic_values(session, POINTS[0])
        for name in ORACLE_OBJECTS:
            assert relative_error(symbolic[name], numeric[name]) < mpmath.mpf("1e-30"), name
        assert geodesic_residual(session, POINTS[0]) < mpmath.mpf("1e-30")


def test_numeric_tensors_need_full_order(sessions):
    with pytest.raises(ValueError):
        numeric_tensors(jet_function(sessions("euclidean2").F2), POINTS[0], order=ORDER - 1)


@pytest.mark.parametrize("name", ["euclidean2", "riemann_diag", "kropina_x", "randers"])
def test_cross_check_passes(sessions, name):
    summary = cross_check(sessions(name), POINTS, precision=40, tolerance="1e-25")
    assert summary.points == 2
    assert summary.skipped == 0
    assert summary.passed, summary.to_dict()
    as_dict = summary.to_dict()
    assert as_dict["passed"] is True
    assert set(as_dict["max_relative_error"]) == set(ORACLE_OBJECTS)


@pytest.mark.slow
def test_cross_check_in_algebraic_kernel(sessions):
    points = [((Fraction(1, 2), Fraction(1), Fraction(1)), (Fraction(1), Fraction(2), Fraction(3, 2)))]
    summary = cross_check(sessions("cubic_root_f"), points, precision=40, tolerance="1e-25")
    assert summary.passed, summary.to_dict()


def test_undefined_points_are_skipped(sessions):
    # beta = y1 vanishes
    bad = ((Fraction(1, 2), Fraction(1, 2)), (Fraction(0), Fraction(1)))
    summary = cross_check(sessions("kropina"), [bad, POINTS[0]], precision=30, tolerance="1e-20")
    assert summary.skipped == 1
    assert summary.points == 1
    empty = cross_check(sessions("kropina"), [bad], precision=30, tolerance="1e-20")
    assert not empty.passed
    # one of two points evaluated falls short of the minimum
    few = cross_check(sessions("kropina"), [bad, POINTS[0]], precision=30, tolerance="1e-20")
    assert few.required == 2
    assert not few.passed
    assert few.to_dict()["required"] == 2
    enough = cross_check(sessions("kropina"), [bad, POINTS[0]], precision=30, tolerance="1e-20", min_points=1)
    assert enough.passed, enough.to_dict()


def test_oracle_covers_every_checked_object():
    for name in ("D", "W[paper]", "W[standard]", "chi", "E"):
        assert name in ORACLE_OBJECTS


def test_relative_error_scale():
    tiny = relative_error([mpmath.mpf("1e-30")], [mpmath.mpf("2e-30")])
    assert close(tiny, "1e-30", eps="1e-40")
    large = relative_error([mpmath.mpf(1000)], [mpmath.mpf(1001)])
    assert close(large, mpmath.mpf(1) / 1001)
