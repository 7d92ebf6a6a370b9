#!/usr/bin/python
# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 by the ARFinsler developers
# Licensed under LGPLv3, see file LICENSE in this source tree.
#
"""
RatField.py - exact rational functions in the base (x) and fiber (y) coordinates

Elements are sympy ``FracElement`` objects of the field Q(x1..xn, y1..yn).
sympy keeps numerator and denominator coprime, so equality is structural.
Generators are declared in the order yn..y1, xn..x1 so that the graded
lexicographic order of sympy ranks x1 < ... < xn < y1 < ... < yn.
"""
# --- standard Python modules ---
import typing as t
from fractions import Fraction
from functools import lru_cache
from math import isqrt

# --- 3rd party modules ---
from sympy.polys.domains import QQ
from sympy.polys.fields import FracElement, field
from sympy.polys.orderings import grlex
from sympy.polys.rings import PolyElement

# --- this application's modules ---
from ..io.ARExceptions import DivisionByZero, ZeroInput

# ------------------------------------------------------------------------------

RatFn = FracElement
MPoly = PolyElement


class _NotHomogeneous(object):
    "Sentinel returned by degree functions"

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "NOT_HOMOGENEOUS"

    def __bool__(self):
        return False


NOT_HOMOGENEOUS = _NotHomogeneous()


def to_fraction(c) -> Fraction:
    return Fraction(int(QQ.numer(c)), int(QQ.denom(c)))


def to_qq(value):
    if isinstance(value, Fraction):
        return QQ(value.numerator, value.denominator)
    if isinstance(value, int):
        return QQ(value)
    if isinstance(value, str):
        fr = Fraction(value)
        return QQ(fr.numerator, fr.denominator)
    return QQ.convert(value)


class RationalFunctionField(object):
    """
    Q(x1..xn, y1..yn) for one dimension n.

    Use :func:`rational_function_field` to get the shared instance for n.
    """

    def __init__(self, n: int):
        if n < 1:
            raise ValueError("dimension must be at least 1")
        self.n = n
        names = [f"y{i}" for i in range(n, 0, -1)] + [f"x{i}" for i in range(n, 0, -1)]
        self.field, *gens = field(",".join(names), QQ, grlex)
        self.ring = self.field.ring
        by_name = dict(zip(names, gens))
        self.x = tuple(by_name[f"x{i}"] for i in range(1, n + 1))
        self.y = tuple(by_name[f"y{i}"] for i in range(1, n + 1))
        self._by_name = by_name
        # position of x_i / y_i inside a monomial exponent tuple
        self._xpos = tuple(2 * n - i for i in range(1, n + 1))
        self._ypos = tuple(n - i for i in range(1, n + 1))
        self.zero = self.field.zero
        self.one = self.field.one

    def __repr__(self):
        return f"Q(x1..x{self.n}, y1..y{self.n})"

    # construction
    def const(self, value) -> RatFn:
        return self.field.ground_new(to_qq(value))

    def var(self, name: str) -> RatFn:
        try:
            return self._by_name[name]
        except KeyError:
            raise ValueError(f"{name} is not a variable of {self!r}") from None

    def coerce(self, value) -> RatFn:
        if isinstance(value, FracElement):
            return value
        return self.const(value)

    # field operations
    def add(self, a, b) -> RatFn:
        return self.coerce(a) + self.coerce(b)

    def mul(self, a, b) -> RatFn:
        return self.coerce(a) * self.coerce(b)

    def neg(self, a) -> RatFn:
        return -self.coerce(a)

    def inv(self, a) -> RatFn:
        a = self.coerce(a)
        if not a:
            raise DivisionByZero("inverse of the zero rational function")
        return a.field.new(a.denom, a.numer)

    def pdiff(self, f, var) -> RatFn:
        """
        Partial derivative; var is a generator or a name like "x2" / "y1".
        """
        if isinstance(var, str):
            var = self.var(var)
        f = self.coerce(f)
        if not f:
            return self.zero
        return f.diff(var)

    # polynomial helpers
    def gcd(self, p: MPoly, q: MPoly) -> MPoly:
        if not p and not q:
            return self.ring.zero
        g = p.gcd(q)
        return g.monic()

    def canonical_pair(self, f) -> t.Tuple[MPoly, MPoly]:
        """
        (numerator, monic denominator) with no common factor.
        """
        f = self.coerce(f)
        lc = f.denom.LC
        return f.numer.quo_ground(lc), f.denom.monic()

    # structure
    def y_degree_range(self, p: MPoly):
        degrees = {sum(m[i] for i in self._ypos) for m in p.keys()}
        return min(degrees), max(degrees)

    def y_homogeneity_degree(self, f):
        """
        Degree d with y^i d/dy^i f = d f, or NOT_HOMOGENEOUS.
        """
        f = self.coerce(f)
        if not f:
            raise ZeroInput("homogeneity degree of zero")
        euler = self.zero
        for yi in self.y:
            euler += yi * f.diff(yi)
        ratio = euler / f
        if not ratio:
            return 0
        if not (ratio.numer.is_ground and ratio.denom.is_ground):
            return NOT_HOMOGENEOUS
        value = to_fraction(ratio.numer.LC) / to_fraction(ratio.denom.LC)
        if value.denominator != 1:
            return NOT_HOMOGENEOUS
        return int(value)

    def is_y_free(self, f) -> bool:
        f = self.coerce(f)
        for p in (f.numer, f.denom):
            for m in p.keys():
                if any(m[i] for i in self._ypos):
                    return False
        return True

    def is_x_free(self, f) -> bool:
        f = self.coerce(f)
        for p in (f.numer, f.denom):
            for m in p.keys():
                if any(m[i] for i in self._xpos):
                    return False
        return True

    def is_constant(self, f) -> bool:
        f = self.coerce(f)
        return f.numer.is_ground and f.denom.is_ground

    def constant_value(self, f) -> Fraction:
        f = self.coerce(f)
        if not self.is_constant(f):
            raise ValueError(f"{self.render(f)} is not a constant")
        if not f:
            return Fraction(0)
        return to_fraction(f.numer.LC) / to_fraction(f.denom.LC)

    def is_perfect_square(self, f) -> bool:
        """
        True when f = h^2 for some h in Q(x, y).
        """
        f = self.coerce(f)
        if not f:
            return True
        return _poly_is_square(f.numer) and _poly_is_square(f.denom)

    # evaluation
    def evaluate(self, f, xs, ys) -> Fraction:
        """
        Exact value at x = xs, y = ys (sequences of rationals).
        """
        f = self.coerce(f)
        point = self._point(xs, ys)
        den = self._eval_poly(f.denom, point)
        if den == 0:
            raise DivisionByZero(f"denominator of {self.render(f)} vanishes at {xs}, {ys}")
        return self._eval_poly(f.numer, point) / den

    def _point(self, xs, ys):
        values = [Fraction(0)] * (2 * self.n)
        for i in range(self.n):
            values[self._xpos[i]] = Fraction(xs[i])
            values[self._ypos[i]] = Fraction(ys[i])
        return values

    @staticmethod
    def _eval_poly(p: MPoly, point) -> Fraction:
        total = Fraction(0)
        for monom, coeff in p.items():
            term = to_fraction(coeff)
            for value, e in zip(point, monom):
                if e:
                    term *= value**e
            total += term
        return total

    def monomial_map(self, p: MPoly):
        """
        Terms of p as ((x exponents), (y exponents), Fraction), in ring order.
        """
        return [
            (
                tuple(m[i] for i in self._xpos),
                tuple(m[i] for i in self._ypos),
                to_fraction(c),
            )
            for m, c in p.terms()
        ]

    # printing
    def render_poly(self, p: MPoly) -> str:
        if not p:
            return "0"
        out = []
        for xe, ye, c in self.monomial_map(p):
            factors = []
            for name, exps in (("x", xe), ("y", ye)):
                for i, e in enumerate(exps, start=1):
                    if e == 1:
                        factors.append(f"{name}{i}")
                    elif e:
                        factors.append(f"{name}{i}^{e}")
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(mag)] + factors)
            out.append((sign, body))
        first_sign, first = out[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in out[1:]:
            text += f" {sign} {body}"
        return text

    def render(self, f) -> str:
        num, den = self.canonical_pair(f)
        if den.is_ground:
            return self.render_poly(num)
        return f"({self.render_poly(num)})/({self.render_poly(den)})"


def _poly_is_square(p: MPoly) -> bool:
    if p.is_ground:
        c = to_fraction(p.LC) if p else Fraction(0)
        return c >= 0 and _is_rational_square(c)
    lc, factors = p.sqf_list()
    if any(e % 2 for _, e in factors):
        return False
    return to_fraction(lc) >= 0 and _is_rational_square(to_fraction(lc))


def _is_rational_square(c: Fraction) -> bool:
    if c < 0:
        return False
    for part in (c.numerator, c.denominator):
        r = isqrt(part)
        if r * r != part:
            return False
    return True


@lru_cache(maxsize=None)
def rational_function_field(n: int) -> RationalFunctionField:
    return RationalFunctionField(n)
