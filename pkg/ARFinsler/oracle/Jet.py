#!/usr/bin/python
# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 by the ARFinsler developers
# Licensed under LGPLv3, see file LICENSE in this source tree.
#
"""
Jet.py - truncated multivariate Taylor polynomials over mpmath

A Jet is the Taylor expansion of a function at one point, kept up to a
total degree ``order``. It is a hyper-dual number with several
infinitesimals and arbitrary order: arithmetic propagates every partial
derivative up to that order at once, with no finite differences.

    >>> x, y = variables([1, 2], order=2)
    >>> f = x * y**2
    >>> f.derivative((1, 1))     # d2f / dx dy = 2y
    mpf('4.0')

Coefficients are stored sparsely, keyed by exponent tuples.
"""
# --- standard Python modules ---
import typing as t
from fractions import Fraction
from math import factorial

# --- 3rd party modules ---
import mpmath

# --- this application's modules ---
from ..core.io.ARExceptions import DivisionByZero

# ------------------------------------------------------------------------------

Monomial = t.Tuple[int, ...]


def to_mpf(value) -> mpmath.mpf:
    if isinstance(value, Fraction):
        return mpmath.mpf(value.numerator) / value.denominator
    return mpmath.mpf(value)


class Jet(object):
    """
    Taylor coefficients c_e of f(p + h) = sum_e c_e h^e, |e| <= order.
    """

    __slots__ = ("nvars", "order", "terms")

    def __init__(self, nvars: int, order: int, terms: t.Optional[t.Dict[Monomial, t.Any]] = None):
        if order < 0:
            raise ValueError("jet order must be >= 0")
        self.nvars = nvars
        self.order = order
        self.terms: t.Dict[Monomial, mpmath.mpf] = {}
        for mono, coeff in (terms or {}).items():
            if coeff and sum(mono) <= order:
                self.terms[mono] = coeff

    @classmethod
    def constant(cls, nvars: int, order: int, value) -> "Jet":
        return cls(nvars, order, {(0,) * nvars: to_mpf(value)})

    @classmethod
    def variable(cls, nvars: int, order: int, index: int, value) -> "Jet":
        e = [0] * nvars
        e[index] = 1
        return cls(nvars, order, {(0,) * nvars: to_mpf(value), tuple(e): mpmath.mpf(1)})

    def _zero_mono(self) -> Monomial:
        return (0,) * self.nvars

    def _coerce(self, other) -> "Jet":
        if isinstance(other, Jet):
            if other.nvars != self.nvars:
                raise ValueError(f"jets in {self.nvars} and {other.nvars} variables")
            return other
        return Jet.constant(self.nvars, self.order, other)

    # accessors
    @property
    def value(self) -> mpmath.mpf:
        return self.terms.get(self._zero_mono(), mpmath.mpf(0))

    def coefficient(self, mono: Monomial) -> mpmath.mpf:
        return self.terms.get(tuple(mono), mpmath.mpf(0))

    def derivative(self, mono: Monomial) -> mpmath.mpf:
        """
        The partial derivative d^|e| f / dh^e at the expansion point.
        """
        if sum(mono) > self.order:
            raise ValueError(f"derivative of order {sum(mono)} from a jet of order {self.order}")
        scale = 1
        for e in mono:
            scale *= factorial(e)
        return self.coefficient(mono) * scale

    def diff(self, index: int) -> "Jet":
        "Partial derivative as a jet; the order drops by one."
        if self.order == 0:
            raise ValueError("cannot differentiate a jet of order 0")
        out = {}
        for mono, coeff in self.terms.items():
            e = mono[index]
            if e:
                lowered = mono[:index] + (e - 1,) + mono[index + 1 :]
                out[lowered] = coeff * e
        return Jet(self.nvars, self.order - 1, out)

    def truncate(self, order: int) -> "Jet":
        return Jet(self.nvars, min(order, self.order), self.terms)

    # arithmetic
    def __add__(self, other):
        other = self._coerce(other)
        order = min(self.order, other.order)
        out = dict(self.terms)
        for mono, coeff in other.terms.items():
            out[mono] = out.get(mono, 0) + coeff
        return Jet(self.nvars, order, out)

    def __radd__(self, other):
        return self + other

    def __neg__(self):
        return Jet(self.nvars, self.order, {m: -c for m, c in self.terms.items()})

    def __pos__(self):
        return self

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) + (-self)

    def __mul__(self, other):
        if not isinstance(other, Jet):
            factor = to_mpf(other)
            return Jet(self.nvars, self.order, {m: c * factor for m, c in self.terms.items()})
        other = self._coerce(other)
        order = min(self.order, other.order)
        right = [(m, sum(m), c) for m, c in other.terms.items()]
        out: t.Dict[Monomial, mpmath.mpf] = {}
        for m1, c1 in self.terms.items():
            d1 = sum(m1)
            for m2, d2, c2 in right:
                if d1 + d2 > order:
                    continue
                mono = tuple(a + b for a, b in zip(m1, m2))
                out[mono] = out.get(mono, 0) + c1 * c2
        return Jet(self.nvars, order, out)

    def __rmul__(self, other):
        return self * other

    def __truediv__(self, other):
        if not isinstance(other, Jet):
            value = to_mpf(other)
            if not value:
                raise DivisionByZero("jet divided by zero")
            return self * (1 / value)
        return self * self._coerce(other) ** -1

    def __rtruediv__(self, other):
        return self._coerce(other) * self ** -1

    def __pow__(self, exponent):
        """
        Integer or rational power. Non-integer powers need a positive value
        at the expansion point, negative ones a nonzero value.
        """
        r = Fraction(exponent)
        if r.denominator == 1 and r >= 0:
            return self._integer_power(int(r))
        c = self.value
        if not c:
            raise DivisionByZero("negative or fractional power of a jet vanishing at the point")
        if r.denominator != 1 and c < 0:
            raise ValueError("fractional power of a jet with negative value")
        base = mpmath.root(c, r.denominator) ** r.numerator
        u = (self - c) * (1 / c)
        total = Jet.constant(self.nvars, self.order, 1)
        term = total
        coef = Fraction(1)
        for k in range(1, self.order + 1):
            coef = coef * (r - k + 1) / k
            if not coef:
                break
            term = term * u
            total = total + term * to_mpf(coef)
        return total * base

    def _integer_power(self, k: int) -> "Jet":
        result = Jet.constant(self.nvars, self.order, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __repr__(self):
        return f"Jet(value={mpmath.nstr(self.value, 10)}, order={self.order}, terms={len(self.terms)})"


def variables(values: t.Sequence, order: int) -> t.List[Jet]:
    "One jet per coordinate, expanded at ``values``."
    nvars = len(values)
    return [Jet.variable(nvars, order, i, v) for i, v in enumerate(values)]


def inverse(rows: t.Sequence[t.Sequence[Jet]]) -> t.List[t.List[Jet]]:
    """
    Matrix inverse by Gauss-Jordan elimination with partial pivoting on the
    values at the expansion point.
    """
    n = len(rows)
    sample = rows[0][0]
    zero = Jet.constant(sample.nvars, sample.order, 0)
    one = Jet.constant(sample.nvars, sample.order, 1)
    a = [list(row) + [one if i == j else zero for j in range(n)] for i, row in enumerate(rows)]
    for col in range(n):
        pivot = max(range(col, n), key=lambda r: abs(a[r][col].value))
        if not a[pivot][col].value:
            raise DivisionByZero("singular jet matrix")
        a[col], a[pivot] = a[pivot], a[col]
        inv = 1 / a[col][col]
        a[col] = [v * inv for v in a[col]]
        for r in range(n):
            if r != col and a[r][col].terms:
                f = a[r][col]
                a[r] = [v - f * w for v, w in zip(a[r], a[col])]
    return [row[n:] for row in a]
