#!/usr/bin/python
# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 by the ARFinsler developers
# Licensed under LGPLv3, see file LICENSE in this source tree.
#
"""
AlgExt.py - the algebraic extension K = Q(x, y)[theta] / (theta^m - A)

theta stands for the positive real m-th root of the kernel A, a rational
function of y-degree m, so theta itself is homogeneous of degree 1 in y.
Every element is stored reduced, as m rational coefficients c_0..c_{m-1} of
1, theta, ..., theta^(m-1).

Both families of derivations extend from Q(x, y) by
    d(theta) = theta * dA / (m A)
which maps theta^d to theta^d times a rational function, so the set of
theta powers present in an element (its support) is never enlarged.
"""
# --- standard Python modules ---
import typing as t
from fractions import Fraction

# --- 3rd party modules ---
import mpmath
from sympy.polys.densebasic import dup_strip
from sympy.polys.euclidtools import dup_gcdex

# --- this application's modules ---
from ..io.ARExceptions import (
    DivisionByZero,
    HomogeneityViolation,
    KernelMismatch,
    NotInvertible,
    ZeroInput,
    ZeroPolynomial,
)
from .RatField import NOT_HOMOGENEOUS, RatFn, RationalFunctionField

# ------------------------------------------------------------------------------


class KernelDesc(object):
    """
    Describes K by (m, A). m = 1 is the trivial kernel K = Q(x, y).

    For m = 1 every element is its own theta^0 coefficient, A plays no role
    and defaults to 1.
    """

    def __init__(self, rf: RationalFunctionField, m: int, A=None):
        if m < 1:
            raise ValueError("kernel degree m must be >= 1")
        self.rf = rf
        self.m = m
        if A is None:
            if m != 1:
                raise ValueError("a kernel with m > 1 needs A")
            A = rf.one
        A = rf.coerce(A)
        if not A:
            raise ZeroPolynomial("kernel A is identically zero")
        if m > 1:
            degree = rf.y_homogeneity_degree(A)
            if degree is NOT_HOMOGENEOUS or degree != m:
                raise HomogeneityViolation(
                    f"kernel A = {rf.render(A)} has y-degree {degree}, expected {m}"
                )
        self.A = A
        self._log_derivative = {}

    @classmethod
    def trivial(cls, rf: RationalFunctionField) -> "KernelDesc":
        return cls(rf, 1)

    @property
    def n(self) -> int:
        return self.rf.n

    @property
    def is_trivial(self) -> bool:
        return self.m == 1

    def __eq__(self, other):
        if not isinstance(other, KernelDesc):
            return NotImplemented
        return self.rf is other.rf and self.m == other.m and self.A == other.A

    def __hash__(self):
        return hash((self.rf.n, self.m, self.rf.render(self.A)))

    def __repr__(self):
        if self.is_trivial:
            return f"KernelDesc(m=1, {self.rf!r})"
        return f"KernelDesc(m={self.m}, A={self.rf.render(self.A)})"

    # element construction
    def element(self, coeffs) -> "FieldElem":
        coeffs = [self.rf.coerce(c) for c in coeffs]
        if len(coeffs) > self.m:
            raise ValueError("use theta_power or arithmetic for theta powers >= m")
        coeffs += [self.rf.zero] * (self.m - len(coeffs))
        return FieldElem(self, tuple(coeffs))

    def lift(self, value) -> "FieldElem":
        if isinstance(value, FieldElem):
            if value.kernel != self:
                raise KernelMismatch(f"{value.kernel!r} vs {self!r}")
            return value
        return self.element([value])

    @property
    def zero(self) -> "FieldElem":
        return self.element([])

    @property
    def one(self) -> "FieldElem":
        return self.element([1])

    def theta(self) -> "FieldElem":
        if self.m == 1:
            return self.element([self.A])
        return self.element([0, 1])

    def theta_power(self, k: int) -> "FieldElem":
        """
        theta^k for any integer k, reduced with theta^m = A.
        """
        if self.m == 1:
            return self.element([self.A**k])
        q, r = divmod(k, self.m)
        coeffs = [self.rf.zero] * self.m
        coeffs[r] = self.A**q
        return FieldElem(self, tuple(coeffs))

    def y(self, i: int) -> "FieldElem":
        return self.lift(self.rf.y[i])

    def x(self, i: int) -> "FieldElem":
        return self.lift(self.rf.x[i])

    def log_derivative(self, var) -> RatFn:
        """
        (d A / d var) / (m A), cached per variable.
        """
        key = str(var)
        if key not in self._log_derivative:
            self._log_derivative[key] = self.rf.pdiff(self.A, var) / (self.m * self.A)
        return self._log_derivative[key]

    def theta_value(self, xs, ys, dps=None):
        """
        Positive real theta at a point, as an mpmath number.
        """
        a = self.rf.evaluate(self.A, xs, ys)
        if self.m > 1 and a <= 0:
            raise ValueError(f"kernel is not positive at {xs}, {ys}")
        value = mpmath.mpf(a.numerator) / a.denominator
        return mpmath.root(value, self.m)


class FieldElem(object):
    """
    Element of K, immutable. Arithmetic mixes freely with RatFn and ints.
    """

    __slots__ = ("kernel", "coeffs")

    def __init__(self, kernel: KernelDesc, coeffs: t.Tuple[RatFn, ...]):
        self.kernel = kernel
        self.coeffs = coeffs

    # helpers
    def _other(self, other) -> "FieldElem":
        if isinstance(other, FieldElem):
            if other.kernel is not self.kernel and other.kernel != self.kernel:
                raise KernelMismatch(f"{other.kernel!r} vs {self.kernel!r}")
            return other
        return self.kernel.lift(other)

    def _new(self, coeffs) -> "FieldElem":
        return FieldElem(self.kernel, tuple(coeffs))

    # arithmetic
    def __add__(self, other):
        other = self._other(other)
        return self._new(a + b for a, b in zip(self.coeffs, other.coeffs))

    __radd__ = __add__

    def __neg__(self):
        return self._new(-a for a in self.coeffs)

    def __sub__(self, other):
        other = self._other(other)
        return self._new(a - b for a, b in zip(self.coeffs, other.coeffs))

    def __rsub__(self, other):
        return self._other(other) - self

    def __mul__(self, other):
        if not isinstance(other, FieldElem):
            c = self.kernel.rf.coerce(other)
            return self._new(a * c for a in self.coeffs)
        other = self._other(other)
        m = self.kernel.m
        A = self.kernel.A
        out = [self.kernel.rf.zero] * m
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if not b:
                    continue
                d = i + j
                term = a * b
                if d >= m:
                    term = term * A
                    d -= m
                out[d] += term
        return self._new(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not isinstance(other, FieldElem):
            c = self.kernel.rf.coerce(other)
            if not c:
                raise DivisionByZero("division by the zero rational function")
            return self._new(a / c for a in self.coeffs)
        return self * self._other(other).inverse()

    def __rtruediv__(self, other):
        return self._other(other) * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            raise TypeError("only integer powers live in K")
        if k < 0:
            return self.inverse() ** (-k)
        result = self.kernel.one
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, FieldElem):
            return self.kernel == other.kernel and self.coeffs == other.coeffs
        try:
            return self == self.kernel.lift(other)
        except (TypeError, ValueError, KernelMismatch):
            return NotImplemented

    def __hash__(self):
        return hash(tuple(str(c) for c in self.coeffs))

    def __bool__(self):
        return any(self.coeffs)

    def __repr__(self):
        return f"FieldElem({self.render()})"

    # structure
    @property
    def theta_support(self) -> frozenset:
        return frozenset(d for d, c in enumerate(self.coeffs) if c)

    @property
    def is_rational(self) -> bool:
        return self.theta_support <= {0}

    def rational_part(self) -> RatFn:
        if not self.is_rational:
            raise ValueError(f"{self.render()} is not rational (support {sorted(self.theta_support)})")
        return self.coeffs[0]

    def inverse(self) -> "FieldElem":
        """
        Inverse through the extended Euclidean algorithm in Q(x, y)[theta].
        """
        if not self:
            raise DivisionByZero("inverse of zero in K")
        rf = self.kernel.rf
        if self.is_rational:
            return self._new([rf.inv(self.coeffs[0])] + list(self.coeffs[1:]))
        domain = rf.field.to_domain()
        m = self.kernel.m
        modulus = [domain.one] + [domain.zero] * (m - 1) + [-self.kernel.A]
        dense = dup_strip(list(reversed(self.coeffs)))
        s, _, h = dup_gcdex(dense, modulus, domain)
        if len(h) != 1:
            raise NotInvertible(
                f"{self.render()} shares a factor with theta^{m} - {rf.render(self.kernel.A)}"
            )
        coeffs = list(reversed(s))
        coeffs += [rf.zero] * (m - len(coeffs))
        return self._new(coeffs[:m])

    def homogeneity_degree(self):
        """
        Total y-degree (theta counting 1), or NOT_HOMOGENEOUS.
        """
        if not self:
            raise ZeroInput("homogeneity degree of zero")
        rf = self.kernel.rf
        degrees = set()
        for d in self.theta_support:
            deg = rf.y_homogeneity_degree(self.coeffs[d])
            if deg is NOT_HOMOGENEOUS:
                return NOT_HOMOGENEOUS
            degrees.add(deg + d)
        if len(degrees) != 1:
            return NOT_HOMOGENEOUS
        return degrees.pop()

    # derivations
    def _derive(self, var) -> "FieldElem":
        rf = self.kernel.rf
        if self.kernel.is_trivial:
            return self._new([rf.pdiff(self.coeffs[0], var)])
        dlog = self.kernel.log_derivative(var)
        out = []
        for d, c in enumerate(self.coeffs):
            if not c:
                out.append(rf.zero)
                continue
            term = rf.pdiff(c, var)
            if d:
                term += c * d * dlog
            out.append(term)
        return self._new(out)

    def dy(self, i: int) -> "FieldElem":
        """
        Fiber derivative d/dy^i (i is 0-based).
        """
        return self._derive(self.kernel.rf.y[i])

    def dx(self, i: int) -> "FieldElem":
        """
        Base derivative d/dx^i (i is 0-based).
        """
        return self._derive(self.kernel.rf.x[i])

    # evaluation and printing
    def evaluate(self, xs, ys):
        """
        Real value at a point with the positive branch of theta (mpmath number).
        """
        rf = self.kernel.rf
        theta = self.kernel.theta_value(xs, ys) if len(self.theta_support - {0}) else 1
        total = mpmath.mpf(0)
        for d, c in enumerate(self.coeffs):
            if not c:
                continue
            value = rf.evaluate(c, xs, ys)
            total += (mpmath.mpf(value.numerator) / value.denominator) * theta**d
        return total

    def evaluate_exact(self, xs, ys) -> Fraction:
        return self.kernel.rf.evaluate(self.rational_part(), xs, ys)

    def render(self) -> str:
        rf = self.kernel.rf
        if self.is_rational:
            return rf.render(self.coeffs[0])
        parts = []
        for d, c in enumerate(self.coeffs):
            if not c:
                continue
            power = "" if d == 0 else ("theta" if d == 1 else f"theta^{d}")
            text = rf.render(c)
            if not power:
                parts.append(f"({text})")
            elif text == "1":
                parts.append(power)
            else:
                parts.append(f"({text})*{power}")
        return " + ".join(parts)


# Module level operations
def k_add(a: FieldElem, b: FieldElem) -> FieldElem:
    return a + b


def k_mul(a: FieldElem, b: FieldElem) -> FieldElem:
    return a * b


def k_neg(a: FieldElem) -> FieldElem:
    return -a


def k_inv(a: FieldElem) -> FieldElem:
    return a.inverse()


def k_pdiff_fiber(a: FieldElem, i: int) -> FieldElem:
    return a.dy(i)


def k_pdiff_base(a: FieldElem, i: int) -> FieldElem:
    return a.dx(i)


def theta_support(a: FieldElem) -> frozenset:
    return a.theta_support


def k_homogeneity_degree(a: FieldElem):
    return a.homogeneity_degree()
