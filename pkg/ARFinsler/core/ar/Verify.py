#!/usr/bin/python
# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 by the ARFinsler developers
# Licensed under LGPLv3, see file LICENSE in this source tree.
#
"""
Verify.py - rationality table, theorem consequences and the claim registry

A Verifier runs every applicable check on one FinslerSession. Identities
that must hold exactly raise InternalInconsistency from the check itself;
claims that may legitimately fail are recorded as "fails"; printed-formula
differences end up in ``report.findings``.
"""
# --- standard Python modules ---
import typing as t

# --- this application's modules ---
from ..algebra.AlgExt import FieldElem
from ..geometry.Pipeline import MetricData
from ..geometry.Session import FinslerSession
from ..geometry.Tensor import Tensor
from ..metrics.Families import FinslerMetric
from ..metrics.Printed import compare_printed, printed_forms
from ..utils.notes import note_and_log
from . import Detect, Formulas
from .Detect import ARDecomposition
from .Records import FAILS, HOLDS, NOT_APPLICABLE, VerificationReport

# ------------------------------------------------------------------------------

#: objects whose rationality the AR propositions assert
RATIONAL_OBJECTS = (
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
    "W[printed]",
    "W[standard]",
    "chi",
    "S",
    "E",
)

#: claims recorded for every metric, "not-applicable" when they do not apply
CLAIMS = (
    ("ar.detect",)
    + tuple(f"rational.{name}" for name in RATIONAL_OBJECTS)
    + (
        "rational.dlog_eta_fiber",
        "rational.dlog_eta_base",
        "rational.delta_log_eta",
        "identity.hcov_metric",
        "identity.mean_landsberg_dual",
        "identity.spray_metric_form",
        "identity.dlog_eta_fiber",
        "identity.main_scalar_formula",
        "identity.mean_cartan_closed_form",
        "identity.riemannian_criterion",
        "identity.delta_log_eta",
        "identity.ar_spray",
        "identity.ar_barthel",
        "identity.ar_s_curvature",
        "lemma.F2_over_eta",
        "lemma.inverse",
        "lemma.symmetric_cartan",
        "theorem.no_randers",
        "theorem.isotropic_S",
        "theorem.isotropic_J",
        "theorem.einstein",
    )
)


def _session_objects(session: FinslerSession) -> t.Dict[str, t.Union[Tensor, FieldElem]]:
    return {
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
        "W[printed]": session.weyl_printed,
        "W[standard]": session.weyl_standard,
        "chi": session.chi,
        "S": session.s_curvature,
        "E": session.e_curvature,
    }


def _support(value) -> t.List[int]:
    return sorted(value.theta_support)


def rationality_report(session: FinslerSession, dec: t.Optional[ARDecomposition]) -> VerificationReport:
    """
    theta support of every object. For AR metrics an irrational object
    fails its claim, otherwise the row is informative only.
    """
    report = VerificationReport()
    for name, value in _session_objects(session).items():
        support = _support(value)
        rational = support in ([], [0])
        detail = "rational" if rational else f"irrational (theta support {support})"
        if dec is None:
            report.add(f"rational.{name}", NOT_APPLICABLE, detail)
        else:
            report.add_bool(f"rational.{name}", rational, detail)
        report.facts[f"support.{name}"] = support
    report.facts["support.F2"] = _support(session.F2)
    return report


def f_is_rational(md: MetricData) -> bool:
    "F itself in Q(x, y): F^2 rational and a perfect square there"
    F2 = md.F2
    return F2.is_rational and md.kernel.rf.is_perfect_square(F2.rational_part())


def _y_free(value: FieldElem) -> bool:
    return value.is_rational and value.kernel.rf.is_y_free(value.rational_part())


def is_isotropic_s(S: FieldElem, F2: FieldElem) -> bool:
    "S = (n+1) c(x) F, tested as S^2 / F^2 free of y"
    return _y_free(S * S / F2)


def is_isotropic_j(J: Tensor, I: Tensor, F2: FieldElem) -> t.Optional[bool]:
    """
    J_k = c(x) F I_k, tested as J_k^2 / (F^2 I_k^2) being one y-free value.
    None when I vanishes (the equation says nothing).
    """
    ratio = None
    for k in range(J.dim):
        if not I[k]:
            if J[k]:
                return False
            continue
        value = J[k] * J[k] / (F2 * I[k] * I[k])
        if not _y_free(value):
            return False
        if ratio is None:
            ratio = value
        elif value != ratio:
            return False
    if ratio is None:
        return None
    return True


def is_einstein(Ric: FieldElem, F2: FieldElem) -> bool:
    "Ric = (n-1) K(x) F^2"
    return _y_free(Ric / F2)


def consequence_report(session: FinslerSession, dec: t.Optional[ARDecomposition]) -> VerificationReport:
    """
    Facts (F rational, S, J, Ric vanishing) and the three theorems for
    irrational F. A theorem fails only when its hypothesis holds and its
    conclusion does not.
    """
    report = VerificationReport()
    md = session.md
    S, J, Ric, I = session.s_curvature, session.mean_landsberg, session.ricci, session.mean_cartan
    F_rational = f_is_rational(md)
    report.facts.update(
        {
            "F_rational": F_rational,
            "F2_rational": md.F2.is_rational,
            "S_zero": not S,
            "J_zero": J.is_zero,
            "Ric_zero": not Ric,
        }
    )
    if dec is None:
        return report
    report.facts["eta_rational"] = dec.eta_is_rational
    # d log eta is rational for every metric living in K
    report.facts["dlog_eta_rational"] = True

    if not F_rational and S.is_rational:
        iso = is_isotropic_s(S, md.F2)
        report.add_bool(
            "theorem.isotropic_S",
            (not iso) or not S,
            f"isotropic: {iso}, S = 0: {not S}",
            None if (not iso or not S) else S.render(),
        )
    if not F_rational and J.is_rational:
        iso = is_isotropic_j(J, I, md.F2)
        if iso is not None:
            report.add_bool(
                "theorem.isotropic_J",
                (not iso) or J.is_zero,
                f"isotropic: {iso}, J = 0: {J.is_zero}",
            )
    if not md.F2.is_rational and Ric.is_rational:
        einstein = is_einstein(Ric, md.F2)
        report.add_bool(
            "theorem.einstein",
            (not einstein) or not Ric,
            f"Einstein: {einstein}, Ric = 0: {not Ric}",
        )
    return report


@note_and_log
class Verifier(object):
    """
    Runs detection and every applicable claim on a session.
    """

    def __init__(
        self,
        session: FinslerSession,
        metric: t.Optional[FinslerMetric] = None,
        expect_ar: t.Optional[bool] = None,
    ):
        self.session = session
        self.metric = metric
        if expect_ar is None and metric is not None:
            expect_ar = metric.expects_ar
        #: None judges nothing (raw F^2)
        self.expect_ar = expect_ar
        self.definite = metric is None or not metric.conic
        self.dec: t.Optional[ARDecomposition] = None
        self.comparisons = []
        self.timings = session.timings

    def detect(self) -> t.Optional[ARDecomposition]:
        with self.timed("ar"):
            self.dec = Detect.detect_ar(self.session.md)
        return self.dec

    def run(self) -> VerificationReport:
        session = self.session
        self.log_title(f"Verify {session.name}")
        report = VerificationReport()
        dec = self.detect()
        detail = "not AR" if dec is None else f"AR, eta = theta^{dec.theta_deg}"
        if self.expect_ar is None or (dec is not None) == self.expect_ar:
            report.add("ar.detect", HOLDS, detail)
        else:
            expected = "AR" if self.expect_ar else "not AR"
            report.add("ar.detect", FAILS, detail, f"expected {expected}")
        self.log(f"{session.name}: {report['ar.detect'].detail}", level="info")

        self._pipeline_identities(report)
        report.merge(rationality_report(session, dec))
        if dec is not None:
            self._ar_identities(report, dec)
        report.merge(consequence_report(session, dec))
        self._family_claims(report, dec)
        report.complete(CLAIMS)
        for record in report.failures:
            self.log(f"{record.claim_id} fails: {record.detail}", level="warning")
        return report

    def _pipeline_identities(self, report: VerificationReport):
        session = self.session
        # computing J checks g^ij L_ijk = -J_k
        session.mean_landsberg
        report.add("identity.mean_landsberg_dual", HOLDS, "g^ij L_ijk = -J_k")
        Detect.hcov_metric_check(session.md, session.metric_hcov, session.landsberg)
        report.add("identity.hcov_metric", HOLDS, "g_ij|k = 2 L_ijk")
        with self.timed("spray_metric_form"):
            report.add_check(Formulas.spray_metric_form(session.md, session.spray))

    def _ar_identities(self, report: VerificationReport, dec: ARDecomposition):
        session = self.session
        with self.timed("ar_identities"):
            fiber = Detect.dlog_eta_fiber(dec)
            base = Detect.dlog_eta_base(dec)
            report.add("identity.dlog_eta_fiber", HOLDS, "1/(n-1) a^ji (ddot_i a_jk - ddot_k a_ij)")
            report.add_bool("rational.dlog_eta_fiber", fiber.is_rational)
            report.add_bool("rational.dlog_eta_base", base.is_rational)
            for check in Detect.mean_cartan_checks(dec, session.mean_cartan):
                report.add_check(check)
            criteria = Detect.riemannian_criteria(dec, session.cartan)
            riemannian = Detect.judge_riemannian(criteria, definite=self.definite)
            report.add("identity.riemannian_criterion", HOLDS, f"Riemannian: {riemannian}")
            if criteria.finding():
                report.findings.append(criteria.finding())
            report.facts["riemannian"] = riemannian
            for claim_id, value in Detect.lemma_checks(dec).items():
                report.add_bool(claim_id, value)
            check, rational = Detect.delta_log_eta_check(
                dec, session.barthel, session.berwald_connection, session.landsberg
            )
            report.add_check(check)
            report.add_bool("rational.delta_log_eta", rational)
            terms = Formulas.ARTerms(dec)
            report.add_check(Formulas.ar_spray_check(dec, session.spray, terms))
            report.add_check(Formulas.ar_barthel_check(dec, session.barthel, terms))
            report.add_check(
                Formulas.ar_s_curvature_check(dec, session.volume, session.s_curvature, terms)
            )

    def _family_claims(self, report: VerificationReport, dec: t.Optional[ARDecomposition]):
        metric = self.metric
        if metric is None:
            return
        session = self.session
        if metric.family == "randers" and not metric.params["b"].is_zero:
            report.add_bool(
                "theorem.no_randers",
                dec is None,
                "Randers metric with beta != 0 is not AR" if dec is None else "detected as AR",
            )
        for form in printed_forms(metric):
            comparison = compare_printed(session.md, dec, form)
            self.comparisons.append(comparison)
            claim_id = f"printed.{form.name}"
            report.add(claim_id, HOLDS, "as printed" if comparison.holds else "corrected form")
            report.findings.extend(comparison.findings)
        if "shen_circles" in metric.params:
            check = Formulas.shen_circles_spray_claim(session.md, session.spray)
            report.add("example.shen_circles_spray", HOLDS if check.holds else NOT_APPLICABLE, check.note)
            report.findings.extend(check.findings)
        for warning in metric.warnings:
            report.findings.append(f"{metric.name}: {warning}")


def verify(session: FinslerSession, metric: t.Optional[FinslerMetric] = None) -> VerificationReport:
    return Verifier(session, metric).run()

