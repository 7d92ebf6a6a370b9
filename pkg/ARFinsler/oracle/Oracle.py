#!/usr/bin/python
# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 by the ARFinsler developers
# Licensed under LGPLv3, see file LICENSE in this source tree.
#
"""
Oracle.py - numeric cross-check of the symbolic pipeline

F^2 is evaluated on jets (its coefficients turned into mpf numbers, theta
taken as the positive real root of A) and every object is rebuilt from the
Taylor coefficients at a point. The symbolic objects, evaluated at the same
rational point, must agree to the configured tolerance.

Errors are relative to max(1, largest component) of each object, so
vanishing objects are compared absolutely.
"""
# --- standard Python modules ---
import itertools
import typing as t
from dataclasses import dataclass, field
from fractions import Fraction

# --- 3rd party modules ---
import mpmath
import numpy as np

# --- this application's modules ---
from ..core.algebra.AlgExt import FieldElem
from ..core.algebra.RatField import RatFn
from ..core.geometry.Session import FinslerSession
from ..core.geometry.Tensor import Tensor
from ..core.io.ARExceptions import DivisionByZero
from ..core.metrics.Sampling import Point, sample_points
from ..core.utils.config import settings
from ..core.utils.notes import note_and_log
from .Jet import Jet, inverse, to_mpf, variables

# ------------------------------------------------------------------------------

#: jet order needed for the Douglas tensor (four fiber derivatives of G)
ORDER = 6

#: objects compared by cross_check
ORACLE_OBJECTS = (
    "g",
    "ginv",
    "C",
    "I",
    "G",
    "N",
    "berwald_connection",
    "berwald_curvature",
    "D",
    "L",
    "J",
    "R",
    "Ric",
    "W[paper]",
    "W[standard]",
    "chi",
    "S",
    "E",
)

JetFunction = t.Callable[[t.Sequence[Jet], t.Sequence[Jet]], Jet]


def _poly_jet(terms, X, Y, powers) -> Jet:
    sample = X[0]
    total = Jet.constant(sample.nvars, sample.order, 0)
    for xe, ye, coeff in terms:
        term = Jet.constant(sample.nvars, sample.order, coeff)
        for kind, base, exps in (("x", X, xe), ("y", Y, ye)):
            for i, e in enumerate(exps):
                if not e:
                    continue
                key = (kind, i, e)
                if key not in powers:
                    powers[key] = base[i] ** e
                term = term * powers[key]
        total = total + term
    return total


def ratfn_jet(rf, f: RatFn) -> JetFunction:
    "A rational function of K's base field as a function of jets."
    num = rf.monomial_map(f.numer)
    den = rf.monomial_map(f.denom)

    def evaluate(X, Y):
        powers = {}
        return _poly_jet(num, X, Y, powers) / _poly_jet(den, X, Y, powers)

    return evaluate


def jet_function(F2: FieldElem) -> JetFunction:
    """
    F^2 as a function of coordinate jets, independent of the symbolic
    derivative machinery.
    """
    kernel = F2.kernel
    rf = kernel.rf
    parts = [(d, ratfn_jet(rf, c)) for d, c in enumerate(F2.coeffs) if c]
    radicand = ratfn_jet(rf, kernel.A)

    def f2(X, Y):
        theta = None
        total = None
        for d, part in parts:
            value = part(X, Y)
            if d:
                if theta is None:
                    theta = radicand(X, Y) ** Fraction(1, kernel.m)
                value = value * theta**d
            total = value if total is None else total + value
        if total is None:
            return Jet.constant(X[0].nvars, X[0].order, 0)
        return total

    return f2


def _array(n, rank, fn) -> np.ndarray:
    out = np.empty((n,) * rank, dtype=object)
    for idx in itertools.product(range(n), repeat=rank):
        out[idx] = fn(*idx)
    return out


def numeric_tensors(
    f2: JetFunction,
    point: Point,
    order: int = ORDER,
    sigma: t.Optional[JetFunction] = None,
) -> t.Dict[str, np.ndarray]:
    """
    Values of every ORACLE_OBJECTS entry at ``point`` from the jet of F^2.
    Arrays hold mpf numbers; scalars are 0-d arrays.
    """
    if order < ORDER:
        raise ValueError(f"the Douglas tensor needs jets of order {ORDER}")
    xs, ys = point
    n = len(xs)
    coords = variables([to_mpf(Fraction(v)) for v in tuple(xs) + tuple(ys)], order)
    X, Y = coords[:n], coords[n:]
    F = f2(X, Y)

    def dy(j: Jet, i):
        return j.diff(n + i)

    def dx(j: Jet, i):
        return j.diff(i)

    dyF = [dy(F, i) for i in range(n)]
    g = [[dy(dyF[i], j) * Fraction(1, 2) for j in range(n)] for i in range(n)]
    ginv = inverse(g)
    dxF = [dx(F, k) for k in range(n)]
    bracket = []
    for r in range(n):
        acc = -dxF[r]
        for k in range(n):
            acc = acc + dy(dxF[k], r) * Y[k]
        bracket.append(acc)
    G = []
    for i in range(n):
        acc = ginv[i][0] * bracket[0]
        for r in range(1, n):
            acc = acc + ginv[i][r] * bracket[r]
        G.append(acc * Fraction(1, 4))
    N = [[dy(G[i], j) for j in range(n)] for i in range(n)]
    Gc = [[[dy(N[i][j], k) for k in range(n)] for j in range(n)] for i in range(n)]
    C = [[[dy(g[i][j], k) * Fraction(1, 2) for k in range(n)] for j in range(n)] for i in range(n)]
    I = []
    for k in range(n):
        acc = Jet.constant(2 * n, order, 0)
        for i in range(n):
            for j in range(n):
                acc = acc + ginv[i][j] * C[i][j][k]
        I.append(acc)

    yv = [Y[i].value for i in range(n)]
    gv = _array(n, 2, lambda i, j: g[i][j].value)
    ell = [sum((gv[m, s] * yv[m] for m in range(n)), mpmath.mpf(0)) for s in range(n)]
    Gbc = _array(n, 4, lambda i, j, k, l: dy(Gc[i][j][k], l).value)

    def landsberg(i, j, k):
        return sum((Gbc[s, i, j, k] * ell[s] for s in range(n)), mpmath.mpf(0)) / 2

    def mean_landsberg(k):
        value = mpmath.mpf(0)
        for s in range(n):
            value += dx(I[k], s).value * yv[s]
            value -= 2 * G[s].value * dy(I[k], s).value
            value -= N[s][k].value * I[s].value
        return value

    def riemann(i, k):
        value = dx(G[i], k) * 2
        for j in range(n):
            value = value - dx(N[i][k], j) * Y[j]
            value = value + G[j] * Gc[i][j][k] * 2
            value = value - N[i][j] * N[j][k]
        return value

    Rj = [[riemann(i, k) for k in range(n)] for i in range(n)]
    Ricj = Rj[0][0]
    for m in range(1, n):
        Ricj = Ricj + Rj[m][m]
    R = _array(n, 2, lambda i, k: Rj[i][k].value)
    Qj = [
        [Rj[i][j] - Ricj * Fraction(1, n + 1) if i == j else Rj[i][j] for j in range(n)]
        for i in range(n)
    ]
    Q = _array(n, 2, lambda i, j: Qj[i][j].value)
    row_div = [sum((dy(Qj[i][s], s).value for s in range(n)), mpmath.mpf(0)) for i in range(n)]
    col_div = [sum((dy(Qj[s][j], s).value for s in range(n)), mpmath.mpf(0)) for j in range(n)]

    def chi(l):
        value = 2 * sum((dy(Rj[i][l], i).value for i in range(n)), mpmath.mpf(0))
        return -(value + dy(Ricj, l).value) / 6

    trace = N[0][0]
    for m in range(1, n):
        trace = trace + N[m][m]
    d1 = [dy(trace, j) for j in range(n)]
    d2 = [[dy(d1[k], l) for l in range(n)] for k in range(n)]

    def douglas(i, j, k, l):
        value = dy(d2[j][k], l).value * yv[i]
        if i == j:
            value += d2[k][l].value
        if i == k:
            value += d2[j][l].value
        if i == l:
            value += d2[j][k].value
        return Gbc[i, j, k, l] - value / (n + 1)

    S = trace
    if sigma is not None:
        s = sigma(X, Y)
        radial = dx(s, 0) * Y[0]
        for m in range(1, n):
            radial = radial + dx(s, m) * Y[m]
        S = S - radial / s

    return {
        "g": gv,
        "ginv": _array(n, 2, lambda i, j: ginv[i][j].value),
        "C": _array(n, 3, lambda i, j, k: C[i][j][k].value),
        "I": _array(n, 1, lambda k: I[k].value),
        "G": _array(n, 1, lambda i: G[i].value),
        "N": _array(n, 2, lambda i, j: N[i][j].value),
        "berwald_connection": _array(n, 3, lambda i, j, k: Gc[i][j][k].value),
        "berwald_curvature": Gbc,
        "D": _array(n, 4, douglas),
        "L": _array(n, 3, landsberg),
        "J": _array(n, 1, mean_landsberg),
        "R": R,
        "Ric": np.array(Ricj.value, dtype=object),
        "W[paper]": _array(n, 2, lambda i, j: Q[i, j] - row_div[i] * yv[i] / (n + 1)),
        "W[standard]": _array(n, 2, lambda i, j: Q[i, j] - col_div[j] * yv[i] / (n + 1)),
        "chi": _array(n, 1, chi),
        "S": np.array(S.value, dtype=object),
        "E": _array(n, 2, lambda i, j: dy(dy(S, i), j).value / 2),
    }


def symbolic_values(session: FinslerSession, point: Point) -> t.Dict[str, np.ndarray]:
    "The session objects of ORACLE_OBJECTS evaluated at ``point``."
    xs, ys = point
    n = session.n
    objects: t.Dict[str, t.Union[Tensor, FieldElem]] = {
        "g": session.md.g,
        "ginv": session.md.ginv,
        "C": session.cartan,
        "I": session.mean_cartan,
        "G": session.spray,
        "N": session.barthel,
        "berwald_connection": session.berwald_connection,
        "berwald_curvature": session.berwald_curvature,
        "D": session.douglas,
        "L": session.landsberg,
        "J": session.mean_landsberg,
        "R": session.riemann,
        "Ric": session.ricci,
        "W[paper]": session.weyl_printed,
        "W[standard]": session.weyl_standard,
        "chi": session.chi,
        "S": session.s_curvature,
        "E": session.e_curvature,
    }
    out = {}
    for name, value in objects.items():
        if isinstance(value, FieldElem):
            out[name] = np.array(value.evaluate(xs, ys), dtype=object)
        else:
            out[name] = _array(n, value.rank, lambda *idx: value[idx].evaluate(xs, ys))
    return out


def relative_error(symbolic: np.ndarray, numeric: np.ndarray) -> mpmath.mpf:
    """
    Largest component difference over max(1, largest |numeric component|).

    Objects whose components all stay below 1 are compared absolutely, a
    vanishing tensor included.
    """
    sym = list(np.ravel(symbolic))
    num = list(np.ravel(numeric))
    diff = max((abs(a - b) for a, b in zip(sym, num)), default=mpmath.mpf(0))
    scale = max([mpmath.mpf(1)] + [abs(v) for v in num])
    return diff / scale


def geodesic_residual(session: FinslerSession, point: Point, f2: t.Optional[JetFunction] = None) -> mpmath.mpf:
    """
    Euler-Lagrange residual of L = F^2/2 along (x, y) with x' = y and
    y' = -2 G(x, y), using the symbolic spray:
    y^j d_j ddot_i L - 2 G^j g_ij - d_i L.
    """
    xs, ys = point
    n = session.n
    f2 = f2 or jet_function(session.F2)
    coords = variables([to_mpf(Fraction(v)) for v in tuple(xs) + tuple(ys)], 2)
    F = f2(coords[:n], coords[n:])
    G = [session.spray[i].evaluate(xs, ys) for i in range(n)]
    yv = [to_mpf(Fraction(v)) for v in ys]
    worst = mpmath.mpf(0)
    scale = mpmath.mpf(1)
    for i in range(n):
        dyF = F.diff(n + i)
        transport = sum((dyF.diff(j).value * yv[j] for j in range(n)), mpmath.mpf(0)) / 2
        spray = sum((dyF.diff(n + j).value * G[j] for j in range(n)), mpmath.mpf(0))
        gradient = F.diff(i).value / 2
        worst = max(worst, abs(transport - spray - gradient))
        scale = max(scale, abs(transport), abs(gradient))
    return worst / scale


@dataclass
class OracleSummary:
    max_relative_error: t.Dict[str, mpmath.mpf] = field(default_factory=dict)
    geodesic_residual: mpmath.mpf = mpmath.mpf(0)
    points: int = 0
    skipped: int = 0
    precision: int = 50
    tolerance: str = "1e-20"
    #: evaluated points needed for a verdict
    required: int = 1

    @property
    def passed(self) -> bool:
        if self.points < max(1, self.required):
            return False
        bound = mpmath.mpf(self.tolerance)
        worst = max(self.max_relative_error.values(), default=mpmath.mpf(0))
        return worst <= bound and self.geodesic_residual <= bound

    def to_dict(self):
        return {
            "max_relative_error": {k: mpmath.nstr(v, 5) for k, v in sorted(self.max_relative_error.items())},
            "geodesic_residual": mpmath.nstr(self.geodesic_residual, 5),
            "points": self.points,
            "skipped": self.skipped,
            "required": self.required,
            "precision": self.precision,
            "tolerance": self.tolerance,
            "passed": self.passed,
        }


@note_and_log
class Oracle(object):
    """
    Compares a session with the jet computation at a list of points.
    Points where something is undefined (a denominator or A vanishes) are
    skipped and counted.
    """

    def __init__(
        self,
        session: FinslerSession,
        precision: t.Optional[int] = None,
        tolerance: t.Optional[str] = None,
    ):
        self.session = session
        self.precision = precision or settings.precision
        self.tolerance = tolerance or settings.tolerance
        self.timings = session.timings
        self.f2 = jet_function(session.F2)
        sigma = session.volume.sigma
        self.sigma = None if sigma == session.rf.one else ratfn_jet(session.rf, sigma)

    def cross_check(self, points: t.Iterable[Point], min_points: t.Optional[int] = None) -> OracleSummary:
        """
        Fails unless min(min_points, number of points given) of them evaluate.
        """
        points = list(points)
        floor = settings.min_points if min_points is None else min_points
        summary = OracleSummary(
            precision=self.precision,
            tolerance=str(self.tolerance),
            required=min(floor, len(points)),
        )
        self.log_title(f"Oracle {self.session.name}", args=f"{self.precision} digits")
        with mpmath.workdps(self.precision), self.timed("oracle"):
            for point in points:
                try:
                    numeric = numeric_tensors(self.f2, point, ORDER, self.sigma)
                    symbolic = symbolic_values(self.session, point)
                    residual = geodesic_residual(self.session, point, self.f2)
                except (DivisionByZero, ZeroDivisionError, ValueError) as error:
                    self.log(f"skipping {point}: {error}", level="debug")
                    summary.skipped += 1
                    continue
                summary.points += 1
                summary.geodesic_residual = max(summary.geodesic_residual, residual)
                for name in ORACLE_OBJECTS:
                    error = relative_error(symbolic[name], numeric[name])
                    previous = summary.max_relative_error.get(name, mpmath.mpf(0))
                    summary.max_relative_error[name] = max(previous, error)
        level = "info" if summary.passed else "warning"
        self.log(
            f"{self.session.name}: oracle {'passed' if summary.passed else 'FAILED'} "
            f"on {summary.points} points ({summary.skipped} skipped, {summary.required} required)",
            level=level,
        )
        return summary


def cross_check(
    session: FinslerSession,
    points: t.Optional[t.Iterable[Point]] = None,
    precision: t.Optional[int] = None,
    tolerance: t.Optional[str] = None,
    seed: t.Optional[int] = None,
    count: t.Optional[int] = None,
    min_points: t.Optional[int] = None,
) -> OracleSummary:
    """
    Seeded sample points unless ``points`` are given.
    """
    if points is None:
        points = sample_points(session.n, count or settings.points, seed if seed is not None else settings.seed)
    return Oracle(session, precision, tolerance).cross_check(points, min_points)
