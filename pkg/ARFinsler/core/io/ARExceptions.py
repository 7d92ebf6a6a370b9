#!/usr/bin/python
# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 by the ARFinsler developers
# Licensed under LGPLv3, see file LICENSE in this source tree.
#
"""
ARExceptions.py - ARFinsler application level exceptions
"""


# Exact arithmetic
class DivisionByZero(ArithmeticError):
    """
    Raised when inverting the zero rational function.
    """

    pass


class NotInvertible(ArithmeticError):
    """
    Raised when an element of K has no inverse. This means theta^m - A is
    reducible and the element is a zero divisor.
    """

    pass


class KernelMismatch(ArithmeticError):
    """
    Two field elements built on different kernels were combined.
    """

    pass


class ZeroInput(ArithmeticError):
    """
    A homogeneity degree was requested for zero.
    """

    pass


class NotHomogeneous(ArithmeticError):
    """
    The value is not positively homogeneous in the fiber coordinates.
    """

    pass


# Spec files
class ParseError(ValueError):
    """
    Metric definition file could not be parsed.
    """

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f" (line {line}, column {column})"
        super().__init__(f"{message}{where}")


class UnknownKey(ParseError):
    pass


class ArityError(ValueError):
    """
    Wrong shape or symmetry for a matrix, vector or coefficient array.
    """

    pass


# Metric constructors
class MetricDefinitionError(ValueError):
    pass


class Degenerate(MetricDefinitionError):
    """
    The fundamental tensor has vanishing determinant.
    """

    pass


class NormViolation(MetricDefinitionError):
    """
    ||beta||_alpha >= 1 at a declared sample point.
    """

    pass


class ZeroOneForm(MetricDefinitionError):
    pass


class ParityViolation(MetricDefinitionError):
    pass


class ZeroPolynomial(MetricDefinitionError):
    pass


class HomogeneityViolation(MetricDefinitionError):
    pass


class Unrepresentable(MetricDefinitionError):
    """
    The metric cannot be written inside a single-kernel field K.
    """

    pass


# Pipeline
class InternalInconsistency(RuntimeError):
    """
    Two independent computations of the same object disagree.
    """

    def __init__(self, claim_id, message, witness=None):
        self.claim_id = claim_id
        self.witness = witness
        super().__init__(f"[{claim_id}] {message}")
