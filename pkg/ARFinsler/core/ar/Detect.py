#!/usr/bin/python
# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 by the ARFinsler developers
# Licensed under LGPLv3, see file LICENSE in this source tree.
#
"""
Detect.py - AR detection and the identities of an AR decomposition

g_ij = eta a_ij with a_ij rational. Inside K the factor eta can always be
chosen as theta^k (coefficient 1); that canonical choice is what
``detect_ar`` returns. Printed eta's differ from it by a rational factor.
"""
# --- standard Python modules ---
import typing as t
from dataclasses import dataclass
from fractions import Fraction

# --- 3rd party modules ---
import numpy as np

# --- this application's modules ---
from ..algebra.AlgExt import FieldElem, KernelDesc
from ..geometry import Pipeline
from ..geometry.Pipeline import MetricData, _sum
from ..geometry.Tensor import Tensor
from ..io.ARExceptions import InternalInconsistency
from .Records import FormulaCheck
from ..metrics.Printed import FamilyVerdict, family_verdict

# ------------------------------------------------------------------------------


@dataclass(frozen=True)
class ARDecomposition:
    md: MetricData
    theta_deg: int
    a: Tensor
    ainv: Tensor

    @property
    def kernel(self) -> KernelDesc:
        return self.md.kernel

    @property
    def n(self) -> int:
        return self.md.n

    @property
    def eta(self) -> FieldElem:
        return self.kernel.theta_power(self.theta_deg)

    @property
    def eta_is_rational(self) -> bool:
        return self.theta_deg == 0

    def lowered_y(self) -> t.List[FieldElem]:
        "a_ij y^j"
        rf = self.kernel.rf
        return [
            _sum(self.kernel, (self.a[i, j] * rf.y[j] for j in range(self.n)))
            for i in range(self.n)
        ]

    def render(self) -> t.Dict[str, t.Any]:
        return {"theta_deg": self.theta_deg, "a": self.a.render()}


def detect_ar(md: MetricData) -> t.Optional[ARDecomposition]:
    """
    Some(decomposition) iff every nonzero g_ij is a single theta power, the
    same one for all entries.
    """
    kernel = md.kernel
    n = md.n
    degrees = set()
    for _, value in md.g.items():
        if not value:
            continue
        support = value.theta_support
        if len(support) != 1:
            return None
        degrees |= support
    if len(degrees) != 1:
        return None
    k = degrees.pop()
    down = kernel.theta_power(-k)
    up = kernel.theta_power(k)
    a = md.g.map(lambda v: v * down, name="a")
    ainv = md.ginv.map(lambda v: v * up, name="a^-1")
    if not a.is_rational or not ainv.is_rational:
        raise InternalInconsistency("ar.detect", "a_ij or a^ij is not rational")
    trace = _sum(kernel, (ainv[i, j] * a[i, j] for i in range(n) for j in range(n)))
    if trace != kernel.lift(n):
        raise InternalInconsistency("ar.trace", "a^ij a_ij != n", witness=trace.render())
    return ARDecomposition(md, k, a, ainv)


def canonical_dlog(dec: ARDecomposition, var) -> FieldElem:
    "d log theta^k / d var = k dA / (m A)"
    kernel = dec.kernel
    return kernel.lift(kernel.log_derivative(var) * dec.theta_deg)


def dlog_eta_fiber(dec: ARDecomposition) -> Tensor:
    """
    ddot_k log eta, cross-checked against
    1/(n-1) a^ji (ddot_i a_jk - ddot_k a_ij) computed from a alone.
    """
    kernel, n = dec.kernel, dec.n
    rf = kernel.rf
    canonical = Tensor.build("dlog_eta_fiber", "l", kernel, lambda k: canonical_dlog(dec, rf.y[k]))
    if n >= 2:
        da = {(i, j, k): dec.a[i, j].dy(k) for i in range(n) for j in range(n) for k in range(n)}
        for k in range(n):
            value = _sum(
                kernel,
                (dec.ainv[j, i] * (da[j, k, i] - da[i, j, k]) for i in range(n) for j in range(n)),
            ) / (n - 1)
            if value != canonical[k]:
                raise InternalInconsistency(
                    "identity.dlog_eta_fiber",
                    "ddot log eta differs from its expression in a",
                    witness=f"k={k + 1}: {(value - canonical[k]).render()}",
                )
    return canonical


def dlog_eta_base(dec: ARDecomposition) -> Tensor:
    rf = dec.kernel.rf
    return Tensor.build("dlog_eta_base", "l", dec.kernel, lambda k: canonical_dlog(dec, rf.x[k]))


def mean_cartan_closed_form(dec: ARDecomposition) -> Tensor:
    "1/(n-1) a^rs (n ddot_r a_sk - ddot_k a_rs)"
    kernel, n = dec.kernel, dec.n

    def component(k):
        value = kernel.zero
        for r in range(n):
            for s in range(n):
                if dec.ainv[r, s]:
                    value = value + dec.ainv[r, s] * (dec.a[s, k].dy(r) * n - dec.a[r, s].dy(k))
        return value / (n - 1)

    return Tensor.build("I[closed]", "l", kernel, component)


def main_scalar_form(dec: ARDecomposition) -> Tensor:
    "a^jk ddot_i a_jk + n ddot_i log eta"
    kernel, n = dec.kernel, dec.n
    u = dlog_eta_fiber(dec)

    def component(i):
        value = _sum(kernel, (dec.ainv[j, k] * dec.a[j, k].dy(i) for j in range(n) for k in range(n)))
        return value + u[i] * n

    return Tensor.build("I[main]", "l", kernel, component)


def mean_cartan_checks(dec: ARDecomposition, I: Tensor) -> t.List[FormulaCheck]:
    """
    Both printed closed forms against the pipeline I_k. They expand C_ijk
    without its factor 1/2, so the exact relation is closed = 2 I.
    """
    checks = []
    twice = [I[k] * 2 for k in range(dec.n)]
    forms = [("identity.main_scalar_formula", main_scalar_form(dec))]
    if dec.n >= 2:
        forms.append(("identity.mean_cartan_closed_form", mean_cartan_closed_form(dec)))
    for claim_id, closed in forms:
        printed = [closed[k] for k in range(dec.n)]
        if printed != twice:
            raise InternalInconsistency(claim_id, "closed form is not 2 I_k")
        exact = [I[k] for k in range(dec.n)]
        verdict = family_verdict("I_k", printed, exact)
        checks.append(FormulaCheck(claim_id, verdict.holds, [verdict]))
    return checks


@dataclass(frozen=True)
class RiemannianCriteria:
    """
    The two printed criteria next to C_ijk = 0. Both printed criteria
    reduce to I_k = 0, so they decide C = 0 only for a positive definite g.
    """

    dlog_form: bool
    trace_form: bool
    cartan_zero: bool

    @property
    def agree(self) -> bool:
        return self.dlog_form == self.trace_form == self.cartan_zero

    @property
    def witness(self) -> str:
        return f"dlog form {self.dlog_form}, trace form {self.trace_form}, C=0 {self.cartan_zero}"

    def finding(self) -> t.Optional[str]:
        if self.agree:
            return None
        return (
            "identity.riemannian_criterion: printed criteria answer "
            f"{self.dlog_form} but C_ijk = 0 is {self.cartan_zero}; "
            "they need a positive definite g"
        )


def riemannian_criteria(dec: ARDecomposition, C: t.Optional[Tensor] = None) -> RiemannianCriteria:
    kernel, n = dec.kernel, dec.n
    u = dlog_eta_fiber(dec)
    first = True
    second = True
    for i in range(n):
        trace = _sum(kernel, (dec.ainv[j, k] * dec.a[j, k].dy(i) for j in range(n) for k in range(n)))
        if u[i] != trace * Fraction(-1, n):
            first = False
        value = _sum(
            kernel,
            (
                dec.ainv[j, k] * (dec.a[j, i].dy(k) * n - dec.a[j, k].dy(i))
                for j in range(n)
                for k in range(n)
            ),
        )
        if value:
            second = False
    C = C if C is not None else Pipeline.cartan(dec.md)
    return RiemannianCriteria(first, second, C.is_zero)


def riemannian_criterion(
    dec: ARDecomposition, C: t.Optional[Tensor] = None, definite: bool = True
) -> bool:
    """
    True when C_ijk = 0. For a definite metric the two printed criteria
    must agree with it; a conic or indefinite metric may have I = 0 and
    C != 0 (m-th root metrics with constant det g), the verdict is then C = 0.
    """
    return judge_riemannian(riemannian_criteria(dec, C), definite)


def judge_riemannian(criteria: RiemannianCriteria, definite: bool = True) -> bool:
    if definite and not criteria.agree:
        raise InternalInconsistency(
            "identity.riemannian_criterion",
            "Riemannian criteria disagree",
            witness=criteria.witness,
        )
    return criteria.cartan_zero


def lemma_checks(dec: ARDecomposition) -> t.Dict[str, bool]:
    """
    F^2/eta = a_ij y^i y^j rational, g^ij = a^ij / eta, and
    ddot_i a_jk + a_jk ddot_i log eta totally symmetric.
    """
    kernel, n = dec.kernel, dec.n
    rf = kernel.rf
    md = dec.md
    out = {}
    ratio = md.F2 * kernel.theta_power(-dec.theta_deg)
    low = dec.lowered_y()
    quad = _sum(kernel, (low[i] * rf.y[i] for i in range(n)))
    out["lemma.F2_over_eta"] = ratio.is_rational and ratio == quad
    inv_eta = kernel.theta_power(-dec.theta_deg)
    out["lemma.inverse"] = all(
        md.ginv[i, j] == dec.ainv[i, j] * inv_eta for i in range(n) for j in range(n)
    )
    u = dlog_eta_fiber(dec)
    T = np.empty((n, n, n), dtype=object)
    for i in range(n):
        for j in range(n):
            for k in range(n):
                T[i, j, k] = dec.a[j, k].dy(i) + dec.a[j, k] * u[i]
    symmetric = True
    for i in range(n):
        for j in range(n):
            for k in range(n):
                if T[i, j, k] != T[j, i, k] or T[i, j, k] != T[k, j, i]:
                    symmetric = False
    out["lemma.symmetric_cartan"] = symmetric
    return out


def delta_log_eta(dec: ARDecomposition, N: Tensor) -> t.List[FieldElem]:
    "delta_k log eta = d_k log eta - N^r_k ddot_r log eta"
    kernel, n = dec.kernel, dec.n
    u = dlog_eta_fiber(dec)
    w = dlog_eta_base(dec)
    return [
        w[k] - _sum(kernel, (N[r, k] * u[r] for r in range(n))) for k in range(n)
    ]


def delta_log_eta_check(
    dec: ARDecomposition, N: Tensor, Gc: Tensor, L: Tensor
) -> t.Tuple[FormulaCheck, bool]:
    """
    delta_k log eta = -1/n a^ij a_ij|k + 2/n g^ij L_ijk holds exactly; the
    printed identity drops the Landsberg term. Returns the check and the
    rationality of delta log eta.
    """
    kernel, n = dec.kernel, dec.n
    md = dec.md
    delta = delta_log_eta(dec, N)
    a_hcov = Pipeline.berwald_hcov(dec.a, N, Gc)
    printed = []
    landsberg = []
    for k in range(n):
        printed.append(
            _sum(kernel, (dec.ainv[i, j] * a_hcov[i, j, k] for i in range(n) for j in range(n)))
            * Fraction(-1, n)
        )
        landsberg.append(
            _sum(kernel, (md.ginv[i, j] * L[i, j, k] for i in range(n) for j in range(n)))
            * Fraction(2, n)
        )
    corrected = [p + q for p, q in zip(printed, landsberg)]
    if corrected != delta:
        raise InternalInconsistency(
            "identity.delta_log_eta",
            "delta log eta differs from -1/n a^ij a_ij|k + 2/n g^ij L_ijk",
        )
    holds = printed == delta
    families = [FamilyVerdict("landsberg-trace", holds, None if holds else "missing 2/n g^ij L_ijk")]
    note = "as printed" if holds else "holds with the Landsberg term 2/n g^ij L_ijk"
    check = FormulaCheck("identity.delta_log_eta", holds, families, note)
    rational = all(v.is_rational for v in delta)
    return check, rational


def hcov_metric_check(md: MetricData, g_hcov: Tensor, L: Tensor) -> bool:
    "g_ij|k = 2 L_ijk for the Berwald connection"
    n = md.n
    for i in range(n):
        for j in range(n):
            for k in range(n):
                if g_hcov[i, j, k] != L[i, j, k] * 2:
                    raise InternalInconsistency(
                        "identity.hcov_metric",
                        "g_ij|k != 2 L_ijk",
                        witness=f"({i + 1},{j + 1},{k + 1})",
                    )
    return True
