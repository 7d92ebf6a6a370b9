#!/usr/bin/python
# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 by the ARFinsler developers
# Licensed under LGPLv3, see file LICENSE in this source tree.
#
"""
Printed.py - published closed forms of each metric family, and their exact check

A PrintedForm holds a printed eta, the printed a_ij split into named term
families, and the printed log-derivatives of eta. Where the family can be
derived independently (the (alpha, beta) metric formula, or the chain rule
for functions of A and beta) each term family also carries its derived
counterpart at g level, so a mismatch is blamed on the family that differs
and quantified by a factor.
"""
# --- standard Python modules ---
import typing as t
from dataclasses import dataclass, field
from fractions import Fraction

# --- 3rd party modules ---
import numpy as np

# --- this application's modules ---
from ..algebra.AlgExt import FieldElem, KernelDesc
from ..io.ARExceptions import InternalInconsistency, Unrepresentable
from .Families import FinslerMetric, OneFormData, RiemannData, poly_phi

# ------------------------------------------------------------------------------

Laurent = t.Dict[int, Fraction]


@dataclass
class TermFamily:
    name: str
    printed: np.ndarray
    derived: t.Optional[np.ndarray] = None


@dataclass
class PrintedForm:
    name: str
    eta: t.Optional[FieldElem]
    families: t.List[TermFamily]
    dlog_fiber: t.Optional[t.List[FieldElem]] = None
    dlog_base: t.Optional[t.List[FieldElem]] = None


@dataclass
class FamilyVerdict:
    name: str
    holds: bool
    factor: t.Optional[str] = None

    def to_dict(self):
        return {"name": self.name, "holds": self.holds, "factor": self.factor}


@dataclass
class PrintedComparison:
    name: str
    holds: bool
    rescale: t.Optional[str] = None
    #: r = eta / theta^k when r is not in Q(x, y)
    irrational_rescale: t.Optional[str] = None
    families: t.List[FamilyVerdict] = field(default_factory=list)
    mismatched_entries: t.List[str] = field(default_factory=list)
    dlog_fiber: t.Optional[FamilyVerdict] = None
    dlog_base: t.Optional[FamilyVerdict] = None

    @property
    def findings(self) -> t.List[str]:
        out = []
        if self.irrational_rescale is not None:
            out.append(f"{self.name}: printed eta is no rational rescale of theta^k, r = {self.irrational_rescale}")
        if not self.holds:
            blamed = [f for f in self.families if not f.holds]
            if blamed:
                for fam in blamed:
                    factor = f" (derived/printed = {fam.factor})" if fam.factor else ""
                    out.append(f"{self.name}: term family '{fam.name}' differs{factor}")
            else:
                entries = ", ".join(self.mismatched_entries)
                out.append(f"{self.name}: printed g_ij differs at entries {entries}")
        for label, verdict in (("dlog_eta_fiber", self.dlog_fiber), ("dlog_eta_base", self.dlog_base)):
            if verdict is not None and not verdict.holds:
                factor = f" (exact/printed = {verdict.factor})" if verdict.factor else ""
                out.append(f"{self.name}: printed {label} differs{factor}")
        return out

    def to_dict(self):
        return {
            "name": self.name,
            "holds": self.holds,
            "rescale": self.rescale,
            "irrational_rescale": self.irrational_rescale,
            "families": [f.to_dict() for f in self.families],
            "mismatched_entries": list(self.mismatched_entries),
            "dlog_fiber": self.dlog_fiber.to_dict() if self.dlog_fiber else None,
            "dlog_base": self.dlog_base.to_dict() if self.dlog_base else None,
            "findings": self.findings,
        }


# array helpers
def _array(kernel: KernelDesc, component) -> np.ndarray:
    n = kernel.n
    out = np.empty((n, n), dtype=object)
    for i in range(n):
        for j in range(n):
            out[i, j] = kernel.lift(component(i, j))
    return out


def _zeros(kernel):
    return _array(kernel, lambda i, j: kernel.zero)


def _add(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    out = np.empty(a.shape, dtype=object)
    for idx in np.ndindex(a.shape):
        out[idx] = a[idx] + b[idx]
    return out


# Laurent polynomials in s
def _lmul(p: Laurent, q: Laurent) -> Laurent:
    out: Laurent = {}
    for a, ca in p.items():
        for b, cb in q.items():
            out[a + b] = out.get(a + b, Fraction(0)) + ca * cb
    return {k: v for k, v in out.items() if v}


def _ladd(p: Laurent, q: Laurent, scale=1) -> Laurent:
    out = dict(p)
    for k, v in q.items():
        out[k] = out.get(k, Fraction(0)) + scale * v
    return {k: v for k, v in out.items() if v}


def _lderiv(p: Laurent) -> Laurent:
    return {k - 1: v * k for k, v in p.items() if k}


def _lshift(p: Laurent, e: int) -> Laurent:
    return {k + e: v for k, v in p.items()}


def _lvalue(aux: KernelDesc, p: Laurent, beta) -> FieldElem:
    "sum c s^p with s = beta / theta"
    total = aux.zero
    for power, coeff in p.items():
        total = total + aux.theta_power(-power) * (beta**power) * coeff
    return total


def gen_metric_tensor(
    rd: RiemannData, b: OneFormData, phi: Laurent, kernel: KernelDesc
) -> t.Dict[str, np.ndarray]:
    """
    g_ij of F = alpha phi(s) by families:
        alpha     rho alpha_ij
        beta-beta rho0 b_i b_j
        mixed     rho1 / alpha (b_i y_j + b_j y_i - s/alpha y_i y_j)
    with rho = phi^2 - s phi phi', rho0 = phi phi'' + phi'^2, rho1 = phi phi' - s rho0.

    Computed in K' = Q(x, y)[alpha]; each family is moved into ``kernel`` and
    must be rational there unless ``kernel`` is K' itself.
    """
    rf = rd.rf
    A = rd.form()
    beta = b.form()
    if kernel.m == 2 and kernel.A == A:
        aux = kernel
    else:
        aux = KernelDesc(rf, 2, A)
    d1 = _lderiv(phi)
    d2 = _lderiv(d1)
    phiphi1 = _lmul(phi, d1)
    rho = _ladd(_lmul(phi, phi), _lshift(phiphi1, 1), -1)
    rho0 = _ladd(_lmul(phi, d2), _lmul(d1, d1))
    rho1 = _ladd(phiphi1, _lshift(rho0, 1), -1)
    low = rd.lowered()
    inv_alpha = aux.theta_power(-1)
    s_over_alpha = aux.theta_power(-2) * beta
    r, r0, r1 = (_lvalue(aux, p, beta) for p in (rho, rho0, rho1))

    def move(value: FieldElem):
        if aux is kernel:
            return value
        if not value.is_rational:
            raise Unrepresentable("(alpha, beta) family leaves the metric kernel")
        return kernel.lift(value.rational_part())

    alpha = _array(kernel, lambda i, j: move(r * rd[i, j]))
    bb = _array(kernel, lambda i, j: move(r0 * (b[i] * b[j])))
    mixed = _array(
        kernel,
        lambda i, j: move(
            r1 * inv_alpha * (b[i] * low[j] + b[j] * low[i])
            - r1 * inv_alpha * s_over_alpha * (low[i] * low[j])
        ),
    )
    return {"alpha": alpha, "beta-beta": bb, "mixed": mixed}


def power_chain_families(
    kernel: KernelDesc, theta_exp: int, q: int = 0, b: t.Optional[OneFormData] = None
) -> t.Dict[str, np.ndarray]:
    """
    g_ij of F^2 = A^p beta^q with A^p = theta^theta_exp, by the chain rule:
        hessian   1/2 h_A    ddot_i ddot_j A
        gradient  1/2 h_AA   ddot_i A ddot_j A
        beta-beta 1/2 h_bb   b_i b_j
        mixed     1/2 h_Ab   (b_j ddot_i A + b_i ddot_j A)
    """
    rf = kernel.rf
    m = kernel.m
    A = kernel.A
    p = Fraction(theta_exp, m)
    n = rf.n
    dA = [rf.pdiff(A, rf.y[i]) for i in range(n)]
    beta = b.form() if b is not None else rf.one
    half = Fraction(1, 2)
    h_A = kernel.theta_power(theta_exp - m) * (beta**q) * (half * p)
    h_AA = kernel.theta_power(theta_exp - 2 * m) * (beta**q) * (half * p * (p - 1))
    out = {
        "hessian": _array(kernel, lambda i, j: h_A * rf.pdiff(dA[i], rf.y[j])),
        "gradient": _array(kernel, lambda i, j: h_AA * (dA[i] * dA[j])),
    }
    if q:
        h_bb = kernel.theta_power(theta_exp) * (beta ** (q - 2)) * (half * q * (q - 1))
        h_Ab = kernel.theta_power(theta_exp - m) * (beta ** (q - 1)) * (half * p * q)
        out["beta-beta"] = _array(kernel, lambda i, j: h_bb * (b[i] * b[j]))
        out["mixed"] = _array(kernel, lambda i, j: h_Ab * (b[j] * dA[i] + b[i] * dA[j]))
    return out


# printed forms by family
def _gen_kropina_forms(metric: FinslerMetric) -> t.List[PrintedForm]:
    kernel = metric.kernel
    rf = kernel.rf
    n = rf.n
    rd, b, k = metric.params["alpha"], metric.params["b"], metric.params["k"]
    A = rd.form()
    beta = b.form()
    low = rd.lowered()
    derived = gen_metric_tensor(rd, b, {-k: Fraction(1)}, kernel)
    families = [
        TermFamily("alpha", _array(kernel, lambda i, j: rd[i, j] * (k + 1)), derived["alpha"]),
        TermFamily(
            "beta-beta",
            _array(kernel, lambda i, j: (b[i] * b[j]) * A / beta**2 * (k * (2 * k + 1))),
            derived["beta-beta"],
        ),
        TermFamily(
            "mixed",
            _array(
                kernel,
                lambda i, j: (b[i] * low[j] + b[j] * low[i] - beta / A * low[i] * low[j])
                / beta
                * (-k * (k + 2)),
            ),
            derived["mixed"],
        ),
    ]
    fiber = [
        kernel.lift(b[r] / beta * (-2 * k) + low[r] / A * (2 * k)) for r in range(n)
    ]
    base = []
    for r in range(n):
        db = sum((rf.y[i] * rf.pdiff(b[i], rf.x[r]) for i in range(n)), rf.zero)
        da = sum(
            (rf.y[i] * rf.y[j] * rf.pdiff(rd[i, j], rf.x[r]) for i in range(n) for j in range(n)),
            rf.zero,
        )
        base.append(kernel.lift(db / beta * (-2 * k) + da / A * k))
    eta = kernel.lift((A / beta**2) ** k)
    return [PrintedForm(metric.family, eta, families, fiber, base)]


def _poly_forms(metric: FinslerMetric) -> t.List[PrintedForm]:
    """
    The printed table writes phi = P s^M + Q s^K, that is P = a, M = k,
    Q = c, K = m in the notation of make_poly_ab.
    """
    kernel = metric.kernel
    rf = kernel.rf
    n = rf.n
    params = metric.params
    rd, b = params["alpha"], params["b"]
    P, Q, M, K = params["a"], params["c"], params["k"], params["m"]
    A = rd.form()
    beta = b.form()
    low = rd.lowered()
    ratio = beta**2 / A
    C = rf.const

    def sp(j):
        # even powers of s only, guaranteed by the parity condition
        return ratio ** (j // 2)

    alpha_coeff = -(
        sp(2 * M) * C(P * P * (M - 1))
        + sp(M + K) * C(P * Q * (K - 1 + M - 1))
        + sp(2 * K) * C(Q * Q * (K - 1))
    )
    bb_coeff = (
        sp(2 * M) * C(P * P * M * (2 * M - 1))
        + sp(2 * K) * C(Q * Q * K * (2 * K - 1))
        + sp(M + K) * C(P * Q * (M + K - 1) * (M + n))
    ) / ratio
    mixed_coeff = -(
        sp(2 * M) * C(2 * P * P * M * (M - 1))
        + sp(2 * K) * C(Q * Q * K * (K - 1))
        + sp(M + K) * C(P * Q * (M + K - 2) * (M + K))
    ) / beta
    derived = gen_metric_tensor(rd, b, poly_phi(P, Q, M, K), kernel)
    families = [
        TermFamily("alpha", _array(kernel, lambda i, j: alpha_coeff * rd[i, j]), derived["alpha"]),
        TermFamily("beta-beta", _array(kernel, lambda i, j: bb_coeff * (b[i] * b[j])), derived["beta-beta"]),
        TermFamily(
            "mixed",
            _array(
                kernel,
                lambda i, j: mixed_coeff * (b[i] * low[j] + b[j] * low[i] - beta / A * low[i] * low[j]),
            ),
            derived["mixed"],
        ),
    ]
    zero = [kernel.zero] * n
    return [PrintedForm(metric.family, kernel.one, families, list(zero), list(zero))]


def _mth_root_forms(metric: FinslerMetric) -> t.List[PrintedForm]:
    kernel = metric.kernel
    rf = kernel.rf
    n = rf.n
    m = kernel.m
    A = kernel.A
    dA = [rf.pdiff(A, rf.y[i]) for i in range(n)]
    hess = [[rf.pdiff(dA[i], rf.y[j]) for j in range(n)] for i in range(n)]
    derived = power_chain_families(kernel, 2)
    extended = metric.family == "extended_mth_root"
    if extended:
        eta = kernel.theta_power(2 - 2 * m)
        hessian_coeff = rf.const(Fraction(1, m))
        gradient_coeff = rf.const(Fraction(2 - m, m * m))
        fiber = [kernel.lift(dA[r] / A * rf.const(Fraction(2 - 2 * m, m))) for r in range(n)]
        base = None
    else:
        eta = kernel.theta_power(2 - 2 * m) / m
        hessian_coeff = rf.one
        gradient_coeff = rf.const(Fraction(2 - m, m))
        printed_factor = rf.const(Fraction(2 * (1 - m), m * m))
        fiber = [kernel.lift(dA[r] / A * printed_factor) for r in range(n)]
        base = [kernel.lift(rf.pdiff(A, rf.x[r]) / A * printed_factor) for r in range(n)]
    forms = []
    for label, sign, dlogs in (("g", 1, (fiber, base)), ("a", -1, (None, None))):
        families = [
            TermFamily(
                "hessian",
                _array(kernel, lambda i, j: A * hess[i][j] * hessian_coeff),
                derived["hessian"],
            ),
            TermFamily(
                "gradient",
                _array(kernel, lambda i, j: dA[i] * dA[j] * gradient_coeff * sign),
                derived["gradient"],
            ),
        ]
        forms.append(PrintedForm(f"{metric.family}:{label}", eta, families, *dlogs))
    return forms


def _kropina_change_forms(metric: FinslerMetric) -> t.List[PrintedForm]:
    kernel = metric.kernel
    rf = kernel.rf
    n = rf.n
    m = kernel.m
    A = kernel.A
    b, k = metric.params["b"], metric.params["k"]
    beta = b.form()
    dA = [rf.pdiff(A, rf.y[i]) for i in range(n)]
    derived = power_chain_families(kernel, 2 * k + 2, -2 * k, b)
    eta = kernel.theta_power(2 * k + 2 - m) * (beta ** (-2 * k))
    families = [
        TermFamily(
            "beta-beta",
            _array(kernel, lambda i, j: A / beta**2 * (b[i] * b[j]) * (k * (2 * k + 1))),
            derived["beta-beta"],
        ),
        TermFamily(
            "hessian",
            _array(kernel, lambda i, j: rf.pdiff(dA[i], rf.y[j]) * rf.const(Fraction(k + 1, m))),
            derived["hessian"],
        ),
        TermFamily(
            "gradient",
            _array(
                kernel,
                lambda i, j: dA[i] * dA[j] / A * rf.const(Fraction((k + 1) * (2 * k - m + 2), m * m)),
            ),
            derived["gradient"],
        ),
        TermFamily(
            "mixed",
            _array(
                kernel,
                lambda i, j: (b[j] * dA[i] + b[i] * dA[j]) / beta * rf.const(Fraction(-2 * k * (k + 1), m)),
            ),
            derived["mixed"],
        ),
    ]
    prefix = "extended_" if metric.params.get("base") == "extended_mth_root" else ""
    return [PrintedForm(f"{prefix}kropina_change", eta, families)]


def _randers_forms(metric: FinslerMetric) -> t.List[PrintedForm]:
    kernel = metric.kernel
    rd, b = metric.params["alpha"], metric.params["b"]
    A = rd.form()
    beta = b.form()
    low = rd.lowered()
    inv_alpha = kernel.theta_power(-1)
    forms = [
        PrintedForm(
            "randers",
            None,
            [
                TermFamily("x-only", _array(kernel, lambda i, j: rd[i, j] + b[i] * b[j])),
                TermFamily(
                    "irrational",
                    _array(
                        kernel,
                        lambda i, j: inv_alpha
                        * ((rd[i, j] - low[i] * low[j] / A) * beta + b[i] * low[j] + b[j] * low[i]),
                    ),
                ),
            ],
        )
    ]
    if "shen_circles" in metric.params:
        forms.append(_shen_circles_form(metric))
    return forms


def _shen_circles_form(metric: FinslerMetric) -> PrintedForm:
    kernel = metric.kernel
    rf = kernel.rf
    a = metric.params["shen_circles"]
    y1, y2 = rf.y
    cubes = y1**3 + y2**3
    printed = [[cubes + y1 * y2**2, cubes], [cubes, cubes + y2 * y1**2]]
    x_only = [[1 + a**2, a**2], [a**2, 1 + a**2]]
    inv_cube = kernel.theta_power(-3)
    return PrintedForm(
        "shen_circles",
        None,
        [
            TermFamily("x-only", _array(kernel, lambda i, j: x_only[i][j])),
            TermFamily("irrational", _array(kernel, lambda i, j: inv_cube * (a * printed[i][j]))),
        ],
    )


_BUILDERS = {
    "kropina": _gen_kropina_forms,
    "gen_kropina": _gen_kropina_forms,
    "poly_ab": _poly_forms,
    "mth_root": _mth_root_forms,
    "extended_mth_root": _mth_root_forms,
    "kropina_change": _kropina_change_forms,
    "randers": _randers_forms,
}


def printed_forms(metric: FinslerMetric) -> t.List[PrintedForm]:
    """
    Every published closed form that applies to this metric (may be empty).
    """
    builder = _BUILDERS.get(metric.family)
    if builder is None:
        return []
    if metric.family == "randers" and metric.params["b"].is_zero:
        return []
    return builder(metric)


def _common_ratio(numerators, denominators) -> t.Tuple[bool, t.Optional[FieldElem]]:
    """
    (True, c) when numerators = c * denominators entrywise with one c.
    """
    ratio = None
    for num, den in zip(numerators, denominators):
        if not den:
            if num:
                return False, None
            continue
        value = num / den
        if ratio is None:
            ratio = value
        elif value != ratio:
            return False, None
    return True, ratio


def _factor_text(ratio: t.Optional[FieldElem]) -> t.Optional[str]:
    if ratio is None:
        return None
    return ratio.render()


def _flat(array: np.ndarray) -> t.List[FieldElem]:
    return [array[idx] for idx in np.ndindex(array.shape)]


def compare_printed(md, dec, form: PrintedForm) -> PrintedComparison:
    """
    Exact comparison of a printed closed form with the metric tensor.

    dec is the AR decomposition (or None for non-AR metrics); the printed
    eta is related to the canonical theta^k by a rational rescale r.
    """
    kernel = md.kernel
    n = md.n
    eta = form.eta if form.eta is not None else kernel.one
    result = PrintedComparison(form.name, holds=False)
    r = None
    if dec is not None:
        r = eta * kernel.theta_power(-dec.theta_deg)
        if r.is_rational:
            result.rescale = r.render()
        else:
            result.irrational_rescale = f"{r.render()} (theta support {sorted(r.theta_support)})"
    total = _zeros(kernel)
    for fam in form.families:
        total = _add(total, fam.printed)
    g_flat = [md.g[i, j] for i in range(n) for j in range(n)]
    printed_g = [eta * v for v in _flat(total)]
    result.holds = g_flat == printed_g
    result.mismatched_entries = [
        f"{i + 1},{j + 1}"
        for i in range(n)
        for j in range(i, n)
        if md.g[i, j] != eta * total[i, j]
    ]
    if all(fam.derived is not None for fam in form.families) and form.families:
        derived_total = _zeros(kernel)
        for fam in form.families:
            derived_total = _add(derived_total, fam.derived)
        if _flat(derived_total) != g_flat:
            raise InternalInconsistency(
                f"printed.{form.name}.derivation",
                "the term families derived independently do not sum to g",
            )
        for fam in form.families:
            printed = [eta * v for v in _flat(fam.printed)]
            derived = _flat(fam.derived)
            uniform, ratio = _common_ratio(derived, printed)
            holds = derived == printed
            factor = None if holds else (_factor_text(ratio) if uniform else "not a common factor")
            result.families.append(FamilyVerdict(fam.name, holds, factor))
    else:
        residual = [g / eta - p for g, p in zip(g_flat, _flat(total))]
        for fam in form.families:
            if result.holds:
                result.families.append(FamilyVerdict(fam.name, True))
                continue
            uniform, c = _common_ratio(residual, _flat(fam.printed))
            if uniform and c is not None and any(_flat(fam.printed)):
                result.families.append(FamilyVerdict(fam.name, False, _factor_text(c + 1)))
            else:
                result.families.append(FamilyVerdict(fam.name, True))
        if not result.holds and all(f.holds for f in result.families):
            # nothing localized: no family is blamed on its own
            result.families = [FamilyVerdict(f.name, f.holds) for f in result.families]
    if dec is not None and r is not None and r.is_rational:
        rf = kernel.rf
        if form.dlog_fiber is not None:
            exact = [
                kernel.lift(kernel.log_derivative(rf.y[i]) * dec.theta_deg) + r.dy(i) / r
                for i in range(n)
            ]
            result.dlog_fiber = family_verdict("dlog_eta_fiber", form.dlog_fiber, exact)
        if form.dlog_base is not None:
            exact = [
                kernel.lift(kernel.log_derivative(rf.x[i]) * dec.theta_deg) + r.dx(i) / r
                for i in range(n)
            ]
            result.dlog_base = family_verdict("dlog_eta_base", form.dlog_base, exact)
    return result


def family_verdict(name, printed, exact) -> FamilyVerdict:
    """
    Entrywise comparison of a printed family with its exact counterpart;
    the factor reported is exact/printed when it is one common value.
    """
    printed, exact = list(printed), list(exact)
    if printed == exact:
        return FamilyVerdict(name, True)
    uniform, ratio = _common_ratio(exact, printed)
    return FamilyVerdict(name, False, _factor_text(ratio) if uniform else "not a common factor")
