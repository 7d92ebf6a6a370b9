#!/usr/bin/env python
# -*- coding utf-8 -*-

"""
The tensor pipeline on metrics whose geometry is known in closed form
"""

from fractions import Fraction

import pytest
import sympy

from ARFinsler.core.algebra.AlgExt import KernelDesc
from ARFinsler.core.algebra.RatField import rational_function_field
from ARFinsler.core.ar.Verify import is_einstein
from ARFinsler.core.geometry.Pipeline import VolumeForm, fundamental_tensor
from ARFinsler.core.geometry.Session import OBJECTS, FinslerSession
from ARFinsler.core.io.ARExceptions import NotHomogeneous, ZeroInput

rf = rational_function_field(2)
x1, x2 = rf.x
y1, y2 = rf.y

POINTS = [
    ((Fraction(1, 2), Fraction(1, 3)), (Fraction(1), Fraction(2))),
    ((Fraction(3, 4), Fraction(2)), (Fraction(-1, 2), Fraction(5, 3))),
    ((Fraction(0), Fraction(1)), (Fraction(1), Fraction(1))),
]


@pytest.mark.parametrize("name", ["euclidean2", "kropina", "cubic_root"])
def test_minkowskian_metrics_are_flat(sessions, name):
    session = sessions(name)
    assert session.spray.is_zero
    assert session.barthel.is_zero
    assert session.riemann.is_zero
    assert not session.ricci
    assert not session.s_curvature


def test_euclidean_cartan_vanishes(sessions):
    session = sessions("euclidean2")
    assert session.cartan.is_zero
    assert session.mean_cartan.is_zero
    assert session.md.g[0, 0] == session.kernel.one
    assert not session.md.g[0, 1]


@pytest.mark.parametrize("name", ["riemann_diag", "riemann_full"])
def test_riemannian_metrics_are_berwald(sessions, name):
    session = sessions(name)
    assert session.cartan.is_zero
    assert session.berwald_curvature.is_zero
    assert session.douglas.is_zero
    assert session.landsberg.is_zero
    assert session.mean_landsberg.is_zero
    assert session.e_curvature.is_zero


def test_riemann_diag_spray(sessions):
    session = sessions("riemann_diag")
    kernel = session.kernel
    # Christoffel symbols of dx1^2 + (1 + x1^2) dx2^2
    assert session.spray[0] == kernel.lift(-x1 * y2**2 / 2)
    assert session.spray[1] == kernel.lift(x1 * y1 * y2 / (1 + x1**2))


def test_riemann_diag_ricci(sessions):
    session = sessions("riemann_diag")
    # Gauss curvature K = -1/(1 + x1^2)^2 and Ric = K F^2 in dimension 2
    expected = -(y1**2 + (1 + x1**2) * y2**2) / (1 + x1**2) ** 2
    assert session.ricci == session.kernel.lift(expected)
    assert is_einstein(session.ricci, session.F2)


def test_riemann_diag_s_curvature(sessions):
    session = sessions("riemann_diag")
    # N^m_m = y^k d_k log sqrt(det g)
    assert session.s_curvature == session.kernel.lift(x1 * y1 / (1 + x1**2))


def _christoffel_spray(rows):
    X = sympy.symbols("x1 x2")
    Y = sympy.symbols("y1 y2")
    g = sympy.Matrix(rows(*X))
    ginv = g.inv()
    n = 2
    sprays = []
    for i in range(n):
        total = 0
        for j in range(n):
            for k in range(n):
                gamma = sum(
                    ginv[i, l] * (sympy.diff(g[l, k], X[j]) + sympy.diff(g[l, j], X[k]) - sympy.diff(g[j, k], X[l]))
                    for l in range(n)
                ) / 2
                total += gamma * Y[j] * Y[k]
        sprays.append(sympy.simplify(total / 2))
    return X, Y, sprays


def test_riemann_full_spray_against_christoffel(sessions):
    session = sessions("riemann_full")
    X, Y, sprays = _christoffel_spray(lambda a, b: [[1, a], [a, 1 + a**2]])
    for xs, ys in POINTS:
        subs = dict(zip(X + Y, [sympy.Rational(v.numerator, v.denominator) for v in xs + ys]))
        for i in range(2):
            value = sympy.Rational(sprays[i].subs(subs))
            expected = Fraction(int(value.p), int(value.q))
            assert session.spray[i].evaluate_exact(xs, ys) == expected


def test_riemann_full_is_einstein_with_zero_s(sessions):
    session = sessions("riemann_full")
    # det g = 1
    assert session.md.det_g == session.kernel.one
    assert not session.s_curvature
    assert is_einstein(session.ricci, session.F2)


def test_spray_and_connection_identities(sessions):
    session = sessions("kropina_x")
    kernel = session.kernel
    G, N = session.spray, session.barthel
    for i in range(2):
        # Euler: y^j N^i_j = 2 G^i
        assert N[i, 0] * y1 + N[i, 1] * y2 == G[i] * 2
        if G[i]:
            assert G[i].homogeneity_degree() == 2
    Gc = session.berwald_connection
    for i in range(2):
        assert Gc[i, 0, 1] == Gc[i, 1, 0]
    assert not G.is_zero
    for value, degree in ((session.ricci, 2), (session.s_curvature, 1)):
        if value:
            assert value.homogeneity_degree() == degree
    assert session.F2.kernel is kernel


def test_weyl_variants_both_available(sessions):
    session = sessions("kropina_x")
    assert session.weyl_printed.rank == 2
    assert session.weyl_standard.rank == 2
    assert session.get("W") is session.weyl_printed


def test_get_every_object(sessions):
    session = sessions("riemann_diag")
    for name in OBJECTS:
        assert session.get(name) is not None
    with pytest.raises(KeyError):
        session.get("torsion")


def test_session_rejects_bad_input():
    trivial = KernelDesc.trivial(rf)
    with pytest.raises(NotHomogeneous):
        fundamental_tensor(trivial.lift(y1**3))
    with pytest.raises(ValueError):
        FinslerSession(trivial.lift(y1**2 + y2**2), weyl_variant="other")
    with pytest.raises(ZeroInput):
        VolumeForm(rf.zero)
    with pytest.raises(ValueError):
        FinslerSession(trivial.lift(y1**2 + y2**2), VolumeForm(y1))
