#!/usr/bin/python
# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 by the ARFinsler developers
# Licensed under LGPLv3, see file LICENSE in this source tree.
#
"""
Families.py - metric constructors

Each constructor validates its data and returns a FinslerMetric, which
unpacks as ``kernel, F2 = make_...(...)``.
"""
# --- standard Python modules ---
import typing as t
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial

# --- this application's modules ---
from ..algebra.AlgExt import FieldElem, KernelDesc
from ..algebra.Matrix import adjugate, determinant
from ..algebra.RatField import NOT_HOMOGENEOUS, RatFn, RationalFunctionField
from ..geometry.Pipeline import fundamental_tensor
from ..io.ARExceptions import (
    ArityError,
    Degenerate,
    HomogeneityViolation,
    MetricDefinitionError,
    NormViolation,
    ParityViolation,
    Unrepresentable,
    ZeroOneForm,
    ZeroPolynomial,
)

# ------------------------------------------------------------------------------

FAMILIES = (
    "riemannian",
    "randers",
    "kropina",
    "gen_kropina",
    "poly_ab",
    "mth_root",
    "extended_mth_root",
    "kropina_change",
    "raw",
)


@dataclass(frozen=True)
class RiemannData:
    """
    alpha_ij(x), a symmetric nondegenerate matrix of rational functions of x.
    """

    rf: RationalFunctionField
    alpha: t.Tuple[t.Tuple[RatFn, ...], ...]

    def __post_init__(self):
        n = self.rf.n
        if len(self.alpha) != n or any(len(row) != n for row in self.alpha):
            raise ArityError(f"alpha must be a {n}x{n} matrix")
        for i in range(n):
            for j in range(n):
                if not self.rf.is_y_free(self.alpha[i][j]):
                    raise HomogeneityViolation(f"alpha[{i + 1},{j + 1}] depends on y")
                if self.alpha[i][j] != self.alpha[j][i]:
                    raise ArityError("alpha must be symmetric")

    @classmethod
    def from_rows(cls, rf, rows):
        return cls(rf, tuple(tuple(rf.coerce(v) for v in row) for row in rows))

    @classmethod
    def euclidean(cls, rf):
        n = rf.n
        return cls.from_rows(rf, [[1 if i == j else 0 for j in range(n)] for i in range(n)])

    def __getitem__(self, idx) -> RatFn:
        i, j = idx
        return self.alpha[i][j]

    def determinant(self) -> RatFn:
        return determinant([list(row) for row in self.alpha])

    def inverse(self) -> t.List[t.List[RatFn]]:
        det = self.determinant()
        if not det:
            raise Degenerate("alpha is singular")
        adj = adjugate([list(row) for row in self.alpha], self.rf.one)
        return [[entry / det for entry in row] for row in adj]

    def lowered(self) -> t.List[RatFn]:
        "y_i = alpha_ij y^j"
        rf = self.rf
        return [
            sum((self.alpha[i][j] * rf.y[j] for j in range(rf.n)), rf.zero)
            for i in range(rf.n)
        ]

    def form(self) -> RatFn:
        "alpha^2 = alpha_ij y^i y^j"
        rf = self.rf
        low = self.lowered()
        return sum((low[i] * rf.y[i] for i in range(rf.n)), rf.zero)


@dataclass(frozen=True)
class OneFormData:
    rf: RationalFunctionField
    b: t.Tuple[RatFn, ...]

    def __post_init__(self):
        if len(self.b) != self.rf.n:
            raise ArityError(f"b must have {self.rf.n} components")
        for i, value in enumerate(self.b):
            if not self.rf.is_y_free(value):
                raise HomogeneityViolation(f"b[{i + 1}] depends on y")

    @classmethod
    def from_values(cls, rf, values):
        return cls(rf, tuple(rf.coerce(v) for v in values))

    def __getitem__(self, i) -> RatFn:
        return self.b[i]

    @property
    def is_zero(self) -> bool:
        return not any(self.b)

    def form(self) -> RatFn:
        "beta = b_i y^i"
        rf = self.rf
        return sum((self.b[i] * rf.y[i] for i in range(rf.n)), rf.zero)

    def norm2(self, rd: RiemannData) -> RatFn:
        "||beta||^2 = alpha^ij b_i b_j"
        inv = rd.inverse()
        n = self.rf.n
        return sum(
            (inv[i][j] * self.b[i] * self.b[j] for i in range(n) for j in range(n)),
            self.rf.zero,
        )


@dataclass(frozen=True)
class RootData:
    """
    The form A of an m-th root metric F = A^(1/m).

    For the extended family A is assembled from coefficients mu (keyed by
    sorted 0-based index tuples) of fiber degree 0.
    """

    rf: RationalFunctionField
    m: int
    A: RatFn
    mu: t.Optional[t.Tuple[t.Tuple[t.Tuple[int, ...], RatFn], ...]] = None

    @property
    def extended(self) -> bool:
        return self.mu is not None

    @classmethod
    def from_form(cls, rf, m, A):
        A = rf.coerce(A)
        if not A:
            raise ZeroPolynomial("A is identically zero")
        if not rf.is_y_free(rf.field(A.denom)):
            raise HomogeneityViolation("A must be polynomial in y; use extended_mth_root")
        return cls(rf, m, A)

    @classmethod
    def from_coefficients(cls, rf, m, coeffs: t.Mapping[t.Tuple[int, ...], t.Any], extended=False):
        """
        A = sum over all index tuples of c_{i1..im} y^i1 ... y^im, with c
        symmetric; coeffs holds one entry per sorted index tuple.
        """
        merged = {}
        for idx, value in coeffs.items():
            if len(idx) != m or any(not 0 <= i < rf.n for i in idx):
                raise ArityError(f"coefficient index {idx} does not fit m={m}, n={rf.n}")
            key = tuple(sorted(idx))
            value = rf.coerce(value)
            if key in merged and merged[key] != value:
                raise ArityError(f"coefficient {key} given twice with different values")
            merged[key] = value
        A = rf.zero
        for key, value in merged.items():
            if not value:
                continue
            if extended:
                degree = rf.y_homogeneity_degree(value)
                if degree is NOT_HOMOGENEOUS or degree != 0:
                    raise HomogeneityViolation(
                        f"mu{key} = {rf.render(value)} is not of fiber degree 0"
                    )
            elif not rf.is_y_free(value):
                raise HomogeneityViolation(f"a{key} depends on y; use extended_mth_root")
            term = value * _multinomial(key)
            for i in key:
                term = term * rf.y[i]
            A += term
        if not A:
            raise ZeroPolynomial("A is identically zero")
        mu = tuple(sorted(merged.items())) if extended else None
        return cls(rf, m, A, mu)


def _multinomial(idx) -> int:
    counts = {}
    for i in idx:
        counts[i] = counts.get(i, 0) + 1
    total = factorial(len(idx))
    for c in counts.values():
        total //= factorial(c)
    return total


@dataclass
class FinslerMetric:
    """
    A constructed metric: F^2 in K plus the data it was built from.
    """

    family: str
    kernel: KernelDesc
    F2: FieldElem
    name: str = ""
    conic: bool = False
    params: t.Dict[str, t.Any] = field(default_factory=dict)
    warnings: t.List[str] = field(default_factory=list)

    def __iter__(self):
        yield self.kernel
        yield self.F2

    @property
    def rf(self) -> RationalFunctionField:
        return self.kernel.rf

    @property
    def n(self) -> int:
        return self.kernel.n

    @property
    def expects_ar(self) -> t.Optional[bool]:
        "the AR verdict the family guarantees, None for a raw F^2"
        if self.family == "raw":
            return None
        if self.family == "randers":
            return self.params["b"].is_zero
        return True


def _check_points_norm(rd, b, points, bound=1):
    if not points:
        return
    norm2 = b.norm2(rd)
    for xs, ys in points:
        value = rd.rf.evaluate(norm2, xs, ys)
        if value >= bound**2:
            raise NormViolation(
                f"||beta||^2 = {value} >= {bound ** 2} at x = {tuple(str(v) for v in xs)}"
            )


def make_riemannian(rd: RiemannData, name="riemannian") -> FinslerMetric:
    rf = rd.rf
    if not rd.determinant():
        raise Degenerate("alpha is singular")
    kernel = KernelDesc.trivial(rf)
    return FinslerMetric(
        "riemannian", kernel, kernel.lift(rd.form()), name, params={"alpha": rd}
    )


def make_randers(rd: RiemannData, b: OneFormData, points=(), name="randers") -> FinslerMetric:
    """
    F = alpha + beta in K = Q(x, y)[theta]/(theta^2 - alpha^2).
    """
    rf = rd.rf
    if not rd.determinant():
        raise Degenerate("alpha is singular")
    _check_points_norm(rd, b, points)
    A = rd.form()
    beta = b.form()
    kernel = KernelDesc(rf, 2, A)
    F2 = kernel.element([A + beta**2, 2 * beta])
    return FinslerMetric("randers", kernel, F2, name, params={"alpha": rd, "b": b})


def _integer_exponent(k, what) -> int:
    if isinstance(k, Fraction):
        if k.denominator != 1:
            raise Unrepresentable(f"{what} = {k} is not an integer; F^2 leaves K")
        k = int(k)
    if not isinstance(k, int):
        raise Unrepresentable(f"{what} = {k!r} is not an integer")
    return k


def make_gen_kropina(rd: RiemannData, b: OneFormData, k=1, name="gen_kropina") -> FinslerMetric:
    """
    F = alpha^(k+1) / beta^k, so F^2 = (alpha^2)^(k+1) / beta^(2k) is rational.
    """
    k = _integer_exponent(k, "k")
    if k < 1:
        raise MetricDefinitionError("generalized Kropina needs k >= 1")
    if b.is_zero:
        raise ZeroOneForm("beta vanishes identically")
    rf = rd.rf
    if not rd.determinant():
        raise Degenerate("alpha is singular")
    kernel = KernelDesc.trivial(rf)
    F2 = kernel.lift(rd.form() ** (k + 1) / b.form() ** (2 * k))
    family = "kropina" if k == 1 else "gen_kropina"
    return FinslerMetric(family, kernel, F2, name, conic=True, params={"alpha": rd, "b": b, "k": k})


def make_kropina(rd: RiemannData, b: OneFormData, name="kropina") -> FinslerMetric:
    return make_gen_kropina(rd, b, 1, name)


def poly_phi(a, c, k, m) -> t.Dict[int, Fraction]:
    "phi(s) = a s^k + c s^m as {power: coefficient}"
    phi = {}
    for power, coeff in ((k, Fraction(a)), (m, Fraction(c))):
        phi[power] = phi.get(power, Fraction(0)) + coeff
    return {p: v for p, v in phi.items() if v}


def make_poly_ab(
    rd: RiemannData, b: OneFormData, a, c, k: int, m: int, points=(), name="poly_ab"
) -> FinslerMetric:
    """
    F = alpha phi(s), phi(s) = a s^k + c s^m, s = beta/alpha, k = m mod 2.

    F^2 = a^2 beta^2k A^(1-k) + 2ac beta^(k+m) A^((2-k-m)/2) + c^2 beta^2m A^(1-m)
    with A = alpha^2, which is rational because k + m is even.
    """
    k = _integer_exponent(k, "k")
    m = _integer_exponent(m, "m")
    if (k - m) % 2:
        raise ParityViolation(f"k = {k} and m = {m} have different parity")
    a, c = Fraction(a), Fraction(c)
    if not a and not c:
        raise ZeroPolynomial("phi is identically zero")
    rf = rd.rf
    if not rd.determinant():
        raise Degenerate("alpha is singular")
    if b.is_zero and (k or m):
        raise ZeroOneForm("beta vanishes identically")
    A = rd.form()
    beta = b.form()
    F2 = rf.zero
    for p1, c1 in poly_phi(a, c, k, m).items():
        for p2, c2 in poly_phi(a, c, k, m).items():
            F2 += rf.const(c1 * c2) * beta ** (p1 + p2) * A ** ((2 - p1 - p2) // 2)
    if not F2:
        raise ZeroPolynomial("F^2 vanishes identically")
    kernel = KernelDesc.trivial(rf)
    metric = FinslerMetric(
        "poly_ab",
        kernel,
        kernel.lift(F2),
        name,
        params={"alpha": rd, "b": b, "a": a, "c": c, "k": k, "m": m},
    )
    # the Hessian must be invertible, F = beta alone is rejected here
    fundamental_tensor(metric.F2)
    if points:
        from .Sampling import sample_ab_regularity

        failures = sample_ab_regularity(metric, points)
        metric.warnings.extend(failures)
    return metric


def make_mth_root(root: RootData, name="mth_root") -> FinslerMetric:
    """
    F = A^(1/m): kernel (m, A) and F^2 = theta^2.
    """
    if root.m < 2:
        raise MetricDefinitionError("m-th root metrics need m >= 2")
    if root.extended:
        return make_extended_mth_root(root, name)
    kernel = KernelDesc(root.rf, root.m, root.A)
    family = "mth_root"
    return FinslerMetric(
        family, kernel, kernel.theta_power(2), name, conic=True, params={"root": root}
    )


def make_extended_mth_root(root: RootData, name="extended_mth_root") -> FinslerMetric:
    if root.m < 2:
        raise MetricDefinitionError("m-th root metrics need m >= 2")
    rf = root.rf
    if not root.extended:
        # accept a plain form too, its coefficients are trivially of degree 0
        root = RootData(rf, root.m, root.A, ())
    kernel = KernelDesc(rf, root.m, root.A)
    return FinslerMetric(
        "extended_mth_root",
        kernel,
        kernel.theta_power(2),
        name,
        conic=True,
        params={"root": root},
    )


def make_kropina_change(
    base: FinslerMetric, b: OneFormData, k=1, name="kropina_change"
) -> FinslerMetric:
    """
    F~ = F^(k+1) / beta^k of an (extended) m-th root metric F:
    F~^2 = theta^(2k+2) / beta^(2k).
    """
    if base.family not in ("mth_root", "extended_mth_root"):
        raise MetricDefinitionError("Kropina change is defined for m-th root metrics")
    k = _integer_exponent(k, "k")
    if k < 1:
        raise MetricDefinitionError("Kropina change needs k >= 1")
    if b.is_zero:
        raise ZeroOneForm("beta vanishes identically")
    kernel = base.kernel
    F2 = kernel.theta_power(2 * k + 2) * (b.form() ** (-2 * k))
    params = dict(base.params)
    params.update({"b": b, "k": k, "base": base.family})
    return FinslerMetric("kropina_change", kernel, F2, name, conic=True, params=params)


def make_raw(kernel: KernelDesc, F2: FieldElem, name="raw") -> FinslerMetric:
    """
    F^2 given directly as an element of K.
    """
    return FinslerMetric("raw", kernel, kernel.lift(F2), name, conic=True)


def shen_circles(rf: RationalFunctionField, A, points=(), name="shen_circles") -> FinslerMetric:
    """
    Randers metric sqrt((y1)^2 + (y2)^2) + A(x) (y1 + y2) on R^2.
    """
    if rf.n != 2:
        raise ArityError("Shen's circles live in dimension 2")
    A = rf.coerce(A)
    if not rf.is_y_free(A):
        raise HomogeneityViolation("A must depend on x only")
    metric = make_randers(
        RiemannData.euclidean(rf), OneFormData(rf, (A, A)), points=points, name=name
    )
    metric.params["shen_circles"] = A
    return metric
