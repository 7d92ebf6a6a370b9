#!/usr/bin/python
# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 by the ARFinsler developers
# Licensed under LGPLv3, see file LICENSE in this source tree.
#
"""
Pipeline.py - the tensor formulas, each one a pure function of its inputs

Indices are 0-based. Upper/lower slots follow the ``variance`` string of the
returned Tensor. Sums over repeated indices are spelled out.
"""
# --- standard Python modules ---
import typing as t
from dataclasses import dataclass
from fractions import Fraction

# --- 3rd party modules ---
import numpy as np

# --- this application's modules ---
from ..algebra.AlgExt import FieldElem, KernelDesc
from ..algebra.Matrix import adjugate, determinant
from ..algebra.RatField import NOT_HOMOGENEOUS, RatFn
from ..io.ARExceptions import (
    Degenerate,
    InternalInconsistency,
    NotHomogeneous,
    ZeroInput,
)
from .Tensor import Tensor

# ------------------------------------------------------------------------------

WEYL_VARIANTS = ("paper", "standard")
#: older spelling of the as-printed variant
WEYL_ALIASES = {"printed": "paper"}


def weyl_variant(name: str) -> str:
    """
    Canonical variant name: case folded, "printed" read as "paper".
    """
    variant = str(name).strip().lower()
    variant = WEYL_ALIASES.get(variant, variant)
    if variant not in WEYL_VARIANTS:
        raise ValueError(f"unknown Weyl variant {name!r}, use one of {WEYL_VARIANTS}")
    return variant


@dataclass(frozen=True)
class MetricData:
    F2: FieldElem
    g: Tensor
    ginv: Tensor
    det_g: FieldElem

    @property
    def kernel(self) -> KernelDesc:
        return self.F2.kernel

    @property
    def n(self) -> int:
        return self.F2.kernel.n

    def lowered_y(self) -> t.List[FieldElem]:
        "y_s = g_sm y^m"
        rf = self.kernel.rf
        out = []
        for s in range(self.n):
            acc = self.kernel.zero
            for m in range(self.n):
                acc = acc + self.g[m, s] * rf.y[m]
            out.append(acc)
        return out


@dataclass(frozen=True)
class VolumeForm:
    """
    dV = sigma(x) dx; sigma must be a nonzero rational function of x only.
    """

    sigma: RatFn

    def __post_init__(self):
        if not self.sigma:
            raise ZeroInput("volume density sigma is zero")

    def check(self, rf):
        if not rf.is_y_free(self.sigma):
            raise ValueError(f"volume density {rf.render(self.sigma)} depends on y")
        return self

    def radial_log_derivative(self, rf) -> RatFn:
        "y^m d(sigma)/dx^m / sigma"
        acc = rf.zero
        for m in range(rf.n):
            acc += rf.y[m] * rf.pdiff(self.sigma, rf.x[m])
        return acc / self.sigma


def _sum(kernel, terms) -> FieldElem:
    acc = kernel.zero
    for term in terms:
        acc = acc + term
    return acc


def fundamental_tensor(F2: FieldElem) -> MetricData:
    """
    g_ij = 1/2 d^2 F2 / dy^i dy^j with its inverse and determinant.
    """
    kernel = F2.kernel
    degree = F2.homogeneity_degree()
    if degree is NOT_HOMOGENEOUS or degree != 2:
        raise NotHomogeneous(f"F2 has fiber degree {degree}, expected 2")
    n = kernel.n
    dF = [F2.dy(i) for i in range(n)]
    g = Tensor.build("g", "ll", kernel, lambda i, j: dF[i].dy(j) / 2, [(0, 1)])
    rows = [[g[i, j] for j in range(n)] for i in range(n)]
    det_g = determinant(rows)
    if not det_g:
        raise Degenerate("det(g) vanishes identically")
    det_inv = det_g.inverse()
    adj = adjugate(rows, kernel.one)
    entries = np.empty((n, n), dtype=object)
    for i in range(n):
        for j in range(n):
            entries[i, j] = adj[i][j] * det_inv
    ginv = Tensor("g^-1", "uu", entries, kernel, [(0, 1)])
    return MetricData(F2, g, ginv, det_g)


def cartan(md: MetricData) -> Tensor:
    return Tensor.build(
        "C", "lll", md.kernel, lambda i, j, k: md.g[i, j].dy(k) / 2, [(0, 1, 2)]
    )


def mean_cartan(md: MetricData, C: t.Optional[Tensor] = None) -> Tensor:
    C = C if C is not None else cartan(md)
    n, kernel = md.n, md.kernel

    def component(k):
        return _sum(kernel, (md.ginv[i, j] * C[i, j, k] for i in range(n) for j in range(n)))

    return Tensor.build("I", "l", kernel, component)


def spray(md: MetricData) -> Tensor:
    """
    G^i = 1/4 g^ir (y^k d_k ddot_r F2 - d_r F2).
    """
    kernel, n = md.kernel, md.n
    rf = kernel.rf
    dxF = [md.F2.dx(k) for k in range(n)]
    bracket = []
    for r in range(n):
        acc = -dxF[r]
        for k in range(n):
            if dxF[k]:
                acc = acc + dxF[k].dy(r) * rf.y[k]
        bracket.append(acc)

    def component(i):
        return _sum(kernel, (md.ginv[i, r] * bracket[r] for r in range(n))) / 4

    return Tensor.build("G", "u", kernel, component)


def barthel(G: Tensor) -> Tensor:
    return Tensor.build("N", "ul", G.kernel, lambda i, j: G[i].dy(j))


def berwald_connection(N: Tensor) -> Tensor:
    return Tensor.build("G^i_jk", "ull", N.kernel, lambda i, j, k: N[i, j].dy(k), [(1, 2)])


def berwald_curvature(Gc: Tensor) -> Tensor:
    return Tensor.build(
        "G^i_jkl", "ulll", Gc.kernel, lambda i, j, k, l: Gc[i, j, k].dy(l), [(1, 2, 3)]
    )


def douglas(N: Tensor, Gbc: Tensor) -> Tensor:
    """
    D^i_jkl = G^i_jkl - 1/(n+1) ddot_j ddot_k ddot_l (y^i N^s_s).
    """
    kernel = N.kernel
    n = kernel.n
    rf = kernel.rf
    trace = _sum(kernel, (N[s, s] for s in range(n)))
    d1 = [trace.dy(j) for j in range(n)]
    d2 = {}
    d3 = {}

    def second(k, l):
        key = tuple(sorted((k, l)))
        if key not in d2:
            d2[key] = d1[key[0]].dy(key[1])
        return d2[key]

    def third(j, k, l):
        key = tuple(sorted((j, k, l)))
        if key not in d3:
            d3[key] = second(key[0], key[1]).dy(key[2])
        return d3[key]

    def component(i, j, k, l):
        # Leibniz rule on y^i * trace
        value = third(j, k, l) * rf.y[i]
        if i == j:
            value = value + second(k, l)
        if i == k:
            value = value + second(j, l)
        if i == l:
            value = value + second(j, k)
        return Gbc[i, j, k, l] - value / (n + 1)

    return Tensor.build("D", "ulll", kernel, component, [(1, 2, 3)])


def landsberg(md: MetricData, Gbc: Tensor) -> Tensor:
    """
    L_ijk = 1/2 y^m g_ms G^s_ijk (sign as printed; see mean_landsberg).
    """
    kernel, n = md.kernel, md.n
    ell = md.lowered_y()
    return Tensor.build(
        "L",
        "lll",
        kernel,
        lambda i, j, k: _sum(kernel, (Gbc[s, i, j, k] * ell[s] for s in range(n))) / 2,
        [(0, 1, 2)],
    )


def mean_landsberg(md: MetricData, L: Tensor, I: Tensor, G: Tensor, N: Tensor) -> Tensor:
    """
    J_k = y^s I_k|s = y^s d_s I_k - 2 G^s ddot_s I_k - N^s_k I_s.

    With L as defined in ``landsberg`` the trace g^ij L_ijk equals -J_k;
    both sides are computed and compared exactly.
    """
    kernel, n = md.kernel, md.n
    rf = kernel.rf

    def covariant(k):
        value = kernel.zero
        for s in range(n):
            value = value + I[k].dx(s) * rf.y[s]
            value = value - G[s] * I[k].dy(s) * 2
            value = value - N[s, k] * I[s]
        return value

    J = Tensor.build("J", "l", kernel, covariant)
    trace = Tensor.build(
        "g^ij L_ijk",
        "l",
        kernel,
        lambda k: _sum(kernel, (md.ginv[i, j] * L[i, j, k] for i in range(n) for j in range(n))),
    )
    for k in range(n):
        if trace[k] + J[k]:
            raise InternalInconsistency(
                "identity.mean_landsberg_dual",
                "g^ij L_ijk and -y^s I_k|s disagree",
                witness=f"k={k + 1}: {(trace[k] + J[k]).render()}",
            )
    return J


def riemann(G: Tensor, N: t.Optional[Tensor] = None, Gc: t.Optional[Tensor] = None) -> Tensor:
    """
    R^i_k = 2 d_k G^i - y^j d_j N^i_k + 2 G^j G^i_jk - N^i_j N^j_k.
    """
    kernel = G.kernel
    n = kernel.n
    rf = kernel.rf
    N = N if N is not None else barthel(G)
    Gc = Gc if Gc is not None else berwald_connection(N)

    def component(i, k):
        value = G[i].dx(k) * 2
        for j in range(n):
            value = value - N[i, k].dx(j) * rf.y[j]
            value = value + G[j] * Gc[i, j, k] * 2
            value = value - N[i, j] * N[j, k]
        return value

    return Tensor.build("R", "ul", kernel, component)


def ricci(R: Tensor) -> FieldElem:
    return _sum(R.kernel, (R[m, m] for m in range(R.dim)))


def projective_ricci(R: Tensor, Ric: FieldElem) -> Tensor:
    "Q^i_j = R^i_j - Ric/(n+1) delta^i_j"
    n = R.dim

    def component(i, j):
        if i == j:
            return R[i, j] - Ric / (n + 1)
        return R[i, j]

    return Tensor.build("Q", "ul", R.kernel, component)


def weyl(R: Tensor, Ric: FieldElem, variant: str = "paper") -> Tensor:
    """
    W^i_j = Q^i_j - 1/(n+1) y^i T^i_j where T^i_j is sum_s ddot_s Q^i_s
    ("paper", the index placement as printed) or sum_s ddot_s Q^s_j ("standard").
    """
    variant = weyl_variant(variant)
    kernel = R.kernel
    n = kernel.n
    rf = kernel.rf
    Q = projective_ricci(R, Ric)
    if variant == "paper":
        div = [_sum(kernel, (Q[i, s].dy(s) for s in range(n))) for i in range(n)]

        def component(i, j):
            return Q[i, j] - div[i] * rf.y[i] / (n + 1)

    else:
        div = [_sum(kernel, (Q[s, j].dy(s) for s in range(n))) for j in range(n)]

        def component(i, j):
            return Q[i, j] - div[j] * rf.y[i] / (n + 1)

    return Tensor.build(f"W[{variant}]", "ul", kernel, component)


def chi(R: Tensor, Ric: FieldElem) -> Tensor:
    "chi_l = -1/6 (2 ddot_i R^i_l + ddot_l Ric)"
    kernel = R.kernel
    n = kernel.n

    def component(l):
        value = _sum(kernel, (R[i, l].dy(i) for i in range(n))) * 2 + Ric.dy(l)
        return value * Fraction(-1, 6)

    return Tensor.build("chi", "l", kernel, component)


def s_curvature(N: Tensor, volume: VolumeForm) -> FieldElem:
    "S = N^m_m - y^m d_m sigma / sigma"
    kernel = N.kernel
    trace = _sum(kernel, (N[m, m] for m in range(kernel.n)))
    return trace - volume.radial_log_derivative(kernel.rf)


def e_curvature(S: FieldElem) -> Tensor:
    return Tensor.build("E", "ll", S.kernel, lambda i, j: S.dy(i).dy(j) / 2, [(0, 1)])


def horizontal(f: FieldElem, N: Tensor, k: int) -> FieldElem:
    "delta_k f = d_k f - N^r_k ddot_r f"
    value = f.dx(k)
    for r in range(N.dim):
        if N[r, k]:
            value = value - N[r, k] * f.dy(r)
    return value


def berwald_hcov(T: Tensor, N: Tensor, Gc: Tensor) -> Tensor:
    """
    T_ij|k = delta_k T_ij - T_sj G^s_ik - T_is G^s_jk for a (0,2) tensor.
    """
    if T.variance != "ll":
        raise ValueError("berwald_hcov is defined for (0,2) tensors")
    kernel = T.kernel
    n = kernel.n
    symmetries = [(0, 1)] if (0, 1) in T.symmetries else []

    def component(i, j, k):
        value = horizontal(T[i, j], N, k)
        for s in range(n):
            value = value - T[s, j] * Gc[s, i, k] - T[i, s] * Gc[s, j, k]
        return value

    return Tensor.build(f"{T.name}|", "lll", kernel, component, symmetries)
