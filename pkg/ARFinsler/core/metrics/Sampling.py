#!/usr/bin/python
# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 by the ARFinsler developers
# Licensed under LGPLv3, see file LICENSE in this source tree.
#
"""
Sampling.py - validity checks of a metric at seeded rational points

Positivity is sampled, never proven. Points live in the cone x in (0, 1],
y in (1/4, 2] unless the caller supplies its own.
"""
# --- standard Python modules ---
import random
import typing as t
from fractions import Fraction

# --- 3rd party modules ---
import mpmath

# --- this application's modules ---
from ..algebra.AlgExt import FieldElem
from ..io.ARExceptions import DivisionByZero

# ------------------------------------------------------------------------------

Point = t.Tuple[t.Tuple[Fraction, ...], t.Tuple[Fraction, ...]]


def sample_points(n: int, count: int, seed: int) -> t.List[Point]:
    rng = random.Random(seed)
    points = []
    for _ in range(count):
        xs = tuple(Fraction(rng.randint(1, 16), 16) for _ in range(n))
        ys = tuple(Fraction(rng.randint(5, 32), 16) for _ in range(n))
        points.append((xs, ys))
    return points


def evaluable(values: t.Iterable[FieldElem], xs, ys) -> bool:
    """
    True when every value is defined at the point and theta is real there.
    """
    try:
        for value in values:
            value.evaluate(xs, ys)
    except (DivisionByZero, ValueError):
        return False
    return True


def admissible_points(metric, points: t.Iterable[Point]) -> t.List[Point]:
    """
    Points where F^2 and theta evaluate (denominators nonzero, A > 0).
    """
    kernel = metric.kernel
    out = []
    for xs, ys in points:
        if not kernel.is_trivial:
            try:
                if kernel.rf.evaluate(kernel.A, xs, ys) <= 0:
                    continue
            except DivisionByZero:
                continue
        if evaluable([metric.F2], xs, ys):
            out.append((xs, ys))
    return out


def _leading_minors(matrix) -> t.List[mpmath.mpf]:
    n = matrix.rows
    return [
        mpmath.det(mpmath.matrix([[matrix[i, j] for j in range(k)] for i in range(k)]))
        for k in range(1, n + 1)
    ]


def sample_positivity(metric, md, points: t.Iterable[Point]) -> t.List[str]:
    """
    F^2 > 0 and g positive definite at each point, or only det(g) != 0 for
    conic metrics. Returns one message per failing point.
    """
    failures = []
    n = md.n
    for xs, ys in admissible_points(metric, points):
        where = _where(xs, ys)
        try:
            F2 = metric.F2.evaluate(xs, ys)
            g = mpmath.matrix(n, n)
            for i in range(n):
                for j in range(n):
                    g[i, j] = md.g[i, j].evaluate(xs, ys)
        except (DivisionByZero, ValueError):
            continue
        if metric.conic:
            if mpmath.det(g) == 0:
                failures.append(f"g is degenerate at {where}")
            continue
        if F2 <= 0:
            failures.append(f"F^2 = {mpmath.nstr(F2, 8)} is not positive at {where}")
            continue
        minors = _leading_minors(g)
        if any(m <= 0 for m in minors):
            failures.append(f"g is not positive definite at {where}")
    return failures


def sample_ab_regularity(metric, points: t.Iterable[Point]) -> t.List[str]:
    """
    phi(s) > 0 and phi - s phi' + (b^2 - s^2) phi'' > 0 for F = alpha phi(beta/alpha).
    """
    from .Families import poly_phi

    params = metric.params
    rd, b = params["alpha"], params["b"]
    phi = poly_phi(params["a"], params["c"], params["k"], params["m"])
    rf = rd.rf
    A = rd.form()
    beta = b.form()
    norm2 = b.norm2(rd)
    failures = []
    for xs, ys in points:
        try:
            a2 = rf.evaluate(A, xs, ys)
            bb = rf.evaluate(norm2, xs, ys)
            bt = rf.evaluate(beta, xs, ys)
        except DivisionByZero:
            continue
        if a2 <= 0:
            continue
        s = mpmath.mpf(bt.numerator) / bt.denominator / mpmath.sqrt(mpmath.mpf(a2.numerator) / a2.denominator)
        b2 = mpmath.mpf(bb.numerator) / bb.denominator
        value = _laurent(phi, s, 0)
        if value <= 0:
            failures.append(f"phi(s) = {mpmath.nstr(value, 8)} <= 0 at {_where(xs, ys)}")
            continue
        test = value - s * _laurent(phi, s, 1) + (b2 - s**2) * _laurent(phi, s, 2)
        if test <= 0:
            failures.append(f"regularity fails (value {mpmath.nstr(test, 8)}) at {_where(xs, ys)}")
    return failures


def _laurent(phi: t.Mapping[int, Fraction], s, order: int):
    total = mpmath.mpf(0)
    for power, coeff in phi.items():
        factor = mpmath.mpf(coeff.numerator) / coeff.denominator
        p = power
        for _ in range(order):
            factor *= p
            p -= 1
        if factor:
            total += factor * s**p
    return total


def _where(xs, ys) -> str:
    return "x=(" + ", ".join(str(v) for v in xs) + "), y=(" + ", ".join(str(v) for v in ys) + ")"
