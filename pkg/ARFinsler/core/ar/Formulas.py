#!/usr/bin/python
# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 by the ARFinsler developers
# Licensed under LGPLv3, see file LICENSE in this source tree.
#
"""
Formulas.py - spray, Barthel and S-curvature in terms of (eta, a_ij)

Notation used below, with w_l = d_l log eta and Phi = a_rs y^r y^s:

    G^i = Ga^i + Gb^i
    Ga^i = P^il w_l,                P^il = 1/2 (y^i y^l - 1/2 Phi a^il)
    Gb^i = 1/2 y^k y^s a^li T_kls,  T_kls = d_k a_ls - 1/2 d_l a_ks

The long Barthel and S-curvature formulas are typed in term by term. Each
printed family is compared with the same family obtained by differentiating
Ga and Gb, and the derived families must add up to the pipeline value.
"""
# --- standard Python modules ---
import typing as t
from fractions import Fraction
from functools import cached_property

# --- this application's modules ---
from ..algebra.AlgExt import FieldElem
from ..geometry.Pipeline import MetricData, VolumeForm, _sum
from ..geometry.Tensor import Tensor
from ..io.ARExceptions import InternalInconsistency
from ..metrics.Printed import family_verdict
from .Detect import ARDecomposition, dlog_eta_base
from .Records import FormulaCheck

# ------------------------------------------------------------------------------

HALF = Fraction(1, 2)
QUARTER = Fraction(1, 4)


class ARTerms(object):
    """
    The building blocks shared by the spray, Barthel and S formulas.
    """

    def __init__(self, dec: ARDecomposition):
        self.dec = dec
        self.kernel = dec.kernel
        self.n = dec.n
        self.y = [self.kernel.lift(v) for v in self.kernel.rf.y]

    @cached_property
    def w(self) -> t.List[FieldElem]:
        tensor = dlog_eta_base(self.dec)
        return [tensor[l] for l in range(self.n)]

    @cached_property
    def phi(self) -> FieldElem:
        low = self.dec.lowered_y()
        return _sum(self.kernel, (low[i] * self.y[i] for i in range(self.n)))

    @cached_property
    def T(self) -> t.Dict[t.Tuple[int, int, int], FieldElem]:
        a, n = self.dec.a, self.n
        return {
            (k, l, s): a[l, s].dx(k) - a[k, s].dx(l) * HALF
            for k in range(n)
            for l in range(n)
            for s in range(n)
        }

    def P(self, i, l) -> FieldElem:
        return (self.y[i] * self.y[l] - self.phi * self.dec.ainv[i, l] * HALF) * HALF

    @cached_property
    def Ga(self) -> t.List[FieldElem]:
        n = self.n
        return [_sum(self.kernel, (self.P(i, l) * self.w[l] for l in range(n))) for i in range(n)]

    @cached_property
    def Gb(self) -> t.List[FieldElem]:
        n = self.n
        return [self.transport(i) for i in range(n)]

    def transport(self, i) -> FieldElem:
        "1/2 y^k y^s a^li T_kls"
        n = self.n
        ainv = self.dec.ainv
        return _sum(
            self.kernel,
            (
                self.y[k] * self.y[s] * ainv[l, i] * self.T[k, l, s]
                for k in range(n)
                for s in range(n)
                for l in range(n)
                if ainv[l, i]
            ),
        ) * HALF


def ar_spray_formula(dec: ARDecomposition, terms: t.Optional[ARTerms] = None) -> Tensor:
    terms = terms or ARTerms(dec)
    return Tensor.build("G[ar]", "u", dec.kernel, lambda i: terms.Ga[i] + terms.Gb[i])


def ar_spray_check(dec: ARDecomposition, G: Tensor, terms: t.Optional[ARTerms] = None) -> FormulaCheck:
    terms = terms or ARTerms(dec)
    formula = ar_spray_formula(dec, terms)
    for i in range(dec.n):
        if formula[i] != G[i]:
            raise InternalInconsistency(
                "identity.ar_spray",
                "spray in terms of (eta, a) differs from the pipeline",
                witness=f"i={i + 1}: {(formula[i] - G[i]).render()}",
            )
    return FormulaCheck("identity.ar_spray", True, [], "as printed")


# Barthel connection N^j_i
def _barthel_printed(terms: ARTerms) -> t.Dict[str, t.Dict[t.Tuple[int, int], FieldElem]]:
    """
    The four printed lines, keyed (j, i) for N^j_i.
    """
    dec, n, y, w = terms.dec, terms.n, terms.y, terms.w
    a, ainv = dec.a, dec.ainv
    kernel = terms.kernel
    radial, metric, dlog, transport = {}, {}, {}, {}
    yw = _sum(kernel, (y[k] * w[k] for k in range(n)))
    for j in range(n):
        for i in range(n):
            value = y[j] * w[i]
            if i == j:
                value = value + yw
            radial[j, i] = value * HALF
            acc = kernel.zero
            for l in range(n):
                inner = kernel.zero
                for r in range(n):
                    bracket = a[i, r] * ainv[j, l] * 2
                    for s in range(n):
                        bracket = bracket + y[s] * (
                            ainv[j, l] * a[r, s].dy(i) + a[r, s] * ainv[j, l].dy(i)
                        )
                    inner = inner + y[r] * bracket
                acc = acc + inner * w[l]
            metric[j, i] = acc * -QUARTER
            dlog[j, i] = _sum(kernel, (terms.P(j, l) * w[l].dy(i) for l in range(n)))
            transport[j, i] = (
                _sum(
                    kernel,
                    (
                        y[k] * y[s] * ainv[l, j] * terms.T[k, l, s]
                        for k in range(n)
                        for s in range(n)
                        for l in range(n)
                    ),
                ).dy(i)
                * HALF
            )
    return {"radial": radial, "metric": metric, "dlog": dlog, "transport": transport}


def _barthel_derived(terms: ARTerms) -> t.Dict[str, t.Dict[t.Tuple[int, int], FieldElem]]:
    """
    ddot_i of Ga^j split by the factor being differentiated.
    """
    n, y, w = terms.n, terms.y, terms.w
    kernel = terms.kernel
    ainv = terms.dec.ainv
    radial, metric, dlog, transport = {}, {}, {}, {}
    for j in range(n):
        for i in range(n):
            radial[j, i] = _sum(kernel, ((y[j] * y[l]).dy(i) * w[l] for l in range(n))) * HALF
            metric[j, i] = _sum(
                kernel, ((terms.phi * ainv[j, l]).dy(i) * w[l] for l in range(n))
            ) * -QUARTER
            dlog[j, i] = _sum(kernel, (terms.P(j, l) * w[l].dy(i) for l in range(n)))
            transport[j, i] = terms.Gb[j].dy(i)
    return {"radial": radial, "metric": metric, "dlog": dlog, "transport": transport}


def ar_barthel_formula(dec: ARDecomposition, terms: t.Optional[ARTerms] = None) -> Tensor:
    "N^j_i as printed, summed over its four lines"
    terms = terms or ARTerms(dec)
    printed = _barthel_printed(terms)
    return Tensor.build(
        "N[ar]",
        "ul",
        dec.kernel,
        lambda j, i: _sum(dec.kernel, (family[j, i] for family in printed.values())),
    )


def ar_barthel_check(dec: ARDecomposition, N: Tensor, terms: t.Optional[ARTerms] = None) -> FormulaCheck:
    terms = terms or ARTerms(dec)
    n = dec.n
    printed = _barthel_printed(terms)
    derived = _barthel_derived(terms)
    for j in range(n):
        for i in range(n):
            total = _sum(dec.kernel, (family[j, i] for family in derived.values()))
            if total != N[j, i]:
                raise InternalInconsistency(
                    "identity.ar_barthel",
                    "derived Barthel families do not sum to N",
                    witness=f"N^{j + 1}_{i + 1}",
                )
    keys = [(j, i) for j in range(n) for i in range(n)]
    verdicts = [
        family_verdict(name, [printed[name][key] for key in keys], [derived[name][key] for key in keys])
        for name in printed
    ]
    holds = all(v.holds for v in verdicts)
    return FormulaCheck("identity.ar_barthel", holds, verdicts, "as printed" if holds else "")


# S-curvature
def _s_printed(terms: ARTerms, volume: VolumeForm) -> t.Dict[str, FieldElem]:
    dec, n, y, w = terms.dec, terms.n, terms.y, terms.w
    a, ainv = dec.a, dec.ainv
    kernel = terms.kernel
    rf = kernel.rf
    radial = kernel.zero
    dlog = kernel.zero
    trace_x = kernel.zero
    transport = kernel.zero
    for l in range(n):
        bracket = y[l] * n
        for r in range(n):
            for s in range(n):
                brace = _sum(
                    kernel,
                    (ainv[m, l] * a[r, s].dy(m) + a[r, s] * ainv[m, l].dy(m) for m in range(n)),
                )
                bracket = bracket - y[r] * y[s] * brace * HALF
        radial = radial + bracket * w[l] * HALF
        for m in range(n):
            dlog = dlog + terms.P(m, l) * w[l].dy(m)
    for k in range(n):
        for m in range(n):
            for l in range(n):
                if not ainv[m, l]:
                    continue
                trace_x = trace_x + y[k] * ainv[m, l] * (
                    a[l, k].dx(m) + a[l, m].dx(k) - a[m, k].dx(l) * QUARTER
                )
    trace_x = trace_x * HALF
    for k in range(n):
        for s in range(n):
            acc = kernel.zero
            for m in range(n):
                for l in range(n):
                    acc = acc + ainv[m, l].dy(m) * terms.T[k, l, s]
                    acc = acc + ainv[m, l] * (a[l, s].dx(k).dy(m) - a[k, s].dx(l).dy(m) * HALF)
            transport = transport + y[k] * y[s] * acc
    transport = transport * HALF
    volume_term = -kernel.lift(volume.radial_log_derivative(rf))
    return {
        "radial": radial,
        "dlog": dlog,
        "trace-x": trace_x,
        "transport": transport,
        "volume": volume_term,
    }


def _s_derived(terms: ARTerms, volume: VolumeForm) -> t.Dict[str, FieldElem]:
    """
    Trace of ddot_m Ga^m and ddot_m Gb^m, split by the factor being
    differentiated; the y^k y^s part of Gb collapses to
    1/2 y^k a^lm d_k a_lm.
    """
    dec, n, y, w = terms.dec, terms.n, terms.y, terms.w
    a, ainv = dec.a, dec.ainv
    kernel = terms.kernel
    radial = _sum(kernel, (terms.P(m, l).dy(m) * w[l] for m in range(n) for l in range(n)))
    dlog = _sum(kernel, (terms.P(m, l) * w[l].dy(m) for m in range(n) for l in range(n)))
    trace_x = _sum(
        kernel,
        (y[k] * ainv[l, m] * a[l, m].dx(k) for k in range(n) for l in range(n) for m in range(n)),
    ) * HALF
    transport = kernel.zero
    for k in range(n):
        for s in range(n):
            inner = _sum(kernel, ((ainv[l, m] * terms.T[k, l, s]).dy(m) for l in range(n) for m in range(n)))
            transport = transport + y[k] * y[s] * inner
    transport = transport * HALF
    volume_term = -kernel.lift(volume.radial_log_derivative(kernel.rf))
    return {
        "radial": radial,
        "dlog": dlog,
        "trace-x": trace_x,
        "transport": transport,
        "volume": volume_term,
    }


def ar_s_curvature_formula(
    dec: ARDecomposition, volume: VolumeForm, terms: t.Optional[ARTerms] = None
) -> FieldElem:
    "S as printed"
    terms = terms or ARTerms(dec)
    return _sum(dec.kernel, _s_printed(terms, volume).values())


def ar_s_curvature_check(
    dec: ARDecomposition, volume: VolumeForm, S: FieldElem, terms: t.Optional[ARTerms] = None
) -> FormulaCheck:
    terms = terms or ARTerms(dec)
    printed = _s_printed(terms, volume)
    derived = _s_derived(terms, volume)
    total = _sum(dec.kernel, derived.values())
    if total != S:
        raise InternalInconsistency(
            "identity.ar_s_curvature",
            "derived S families do not sum to S",
            witness=(total - S).render(),
        )
    verdicts = [family_verdict(name, [printed[name]], [derived[name]]) for name in printed]
    holds = all(v.holds for v in verdicts)
    return FormulaCheck("identity.ar_s_curvature", holds, verdicts, "as printed" if holds else "")


def spray_metric_form(md: MetricData, G: Tensor) -> FormulaCheck:
    """
    G^i = 1/2 g^ir (y^k y^s d_k g_rs - c y^l y^s d_r g_ls) is printed with
    c = 2; expanding d_r F^2 = y^l y^s d_r g_ls gives c = 1/2.
    """
    kernel, n = md.kernel, md.n
    y = [kernel.lift(v) for v in kernel.rf.y]
    dg = {(k, r, s): md.g[r, s].dx(k) for k in range(n) for r in range(n) for s in range(n)}
    transport = []
    gradient = []
    for r in range(n):
        transport.append(_sum(kernel, (y[k] * y[s] * dg[k, r, s] for k in range(n) for s in range(n))))
        gradient.append(_sum(kernel, (y[l] * y[s] * dg[r, l, s] for l in range(n) for s in range(n))))
    printed = {"transport": [], "gradient": []}
    derived = {"transport": [], "gradient": []}
    for i in range(n):
        t_i = _sum(kernel, (md.ginv[i, r] * transport[r] for r in range(n))) * HALF
        g_i = _sum(kernel, (md.ginv[i, r] * gradient[r] for r in range(n))) * HALF
        printed["transport"].append(t_i)
        derived["transport"].append(t_i)
        printed["gradient"].append(g_i * -2)
        derived["gradient"].append(g_i * -HALF)
        if t_i - g_i * HALF != G[i]:
            raise InternalInconsistency(
                "identity.spray_metric_form",
                "g-only spray expression differs from the pipeline",
                witness=f"i={i + 1}",
            )
    verdicts = [family_verdict(name, printed[name], derived[name]) for name in printed]
    holds = all(v.holds for v in verdicts)
    return FormulaCheck("identity.spray_metric_form", holds, verdicts, "" if not holds else "as printed")


def shen_circles_spray_claim(md: MetricData, G: Tensor) -> FormulaCheck:
    """
    The printed spray of Shen's circles example: G^1 = y^2 alpha / 2,
    G^2 = y^1 alpha / 2, with alpha = theta.
    """
    kernel = md.kernel
    y1, y2 = (kernel.lift(v) for v in kernel.rf.y)
    alpha = kernel.theta()
    printed = [alpha * y2 * HALF, alpha * y1 * HALF]
    verdict = family_verdict("G", printed, [G[0], G[1]])
    note = "as printed" if verdict.holds else "holds only for special A(x)"
    return FormulaCheck("example.shen_circles_spray", verdict.holds, [verdict], note)
