#!/usr/bin/env python
# -*- coding utf-8 -*-

"""
AR detection and the identities that follow from an AR decomposition
"""

import pytest

from ARFinsler.core.algebra.RatField import rational_function_field
from ARFinsler.core.ar import Detect
from ARFinsler.core.io.ARExceptions import InternalInconsistency
from ARFinsler.core.metrics.Catalog import CATALOG

FAST = [
    "euclidean2",
    "riemann_diag",
    "riemann_full",
    "randers",
    "shen_circles",
    "kropina",
    "gen_kropina2",
    "kropina_x",
    "poly_ab_02",
    "poly_ab_13",
    "cubic_root",
]
SLOW = ["cubic_root_f", "extended_cubic", "kropina_change_cubic", "extended_kropina_change"]


@pytest.mark.parametrize(
    "name", FAST + [pytest.param(name, marks=pytest.mark.slow) for name in SLOW]
)
def test_detection_matches_catalog(sessions, name):
    dec = Detect.detect_ar(sessions(name).md)
    assert (dec is not None) == CATALOG[name].expect_ar


@pytest.mark.parametrize(
    "name, theta_deg",
    [("euclidean2", 0), ("riemann_diag", 0), ("kropina", 0), ("poly_ab_13", 0), ("cubic_root", 2)],
)
def test_theta_degree(sessions, name, theta_deg):
    dec = Detect.detect_ar(sessions(name).md)
    assert dec.theta_deg == theta_deg
    assert dec.eta_is_rational == (theta_deg == 0)
    assert dec.a.is_rational
    assert dec.render()["theta_deg"] == theta_deg


def test_cubic_root_decomposition(sessions):
    session = sessions("cubic_root")
    dec = Detect.detect_ar(session.md)
    kernel = dec.kernel
    for (i, j), value in session.md.g.items():
        assert value == dec.a[i, j] * kernel.theta_power(2)


def test_dlog_eta_is_canonical(sessions):
    dec = Detect.detect_ar(sessions("cubic_root").md)
    rf = rational_function_field(3)
    y1, y2, y3 = rf.y
    u = Detect.dlog_eta_fiber(dec)
    # d log theta^2 / dy = 2/3 dA/A
    assert u[0] == dec.kernel.lift(2 / (3 * y1))
    assert u[2] == dec.kernel.lift(2 / (3 * y3))
    assert Detect.dlog_eta_base(dec).is_zero


@pytest.mark.parametrize(
    "name, riemannian",
    [("euclidean2", True), ("riemann_full", True), ("kropina", False)],
)
def test_riemannian_criterion(sessions, name, riemannian):
    session = sessions(name)
    dec = Detect.detect_ar(session.md)
    assert Detect.riemannian_criterion(dec, session.cartan) is riemannian
    assert Detect.riemannian_criteria(dec, session.cartan).agree


def test_riemannian_criteria_need_a_definite_metric(sessions):
    # constant det g: I = 0 while C != 0
    session = sessions("cubic_root")
    dec = Detect.detect_ar(session.md)
    assert session.mean_cartan.is_zero
    criteria = Detect.riemannian_criteria(dec, session.cartan)
    assert (criteria.dlog_form, criteria.trace_form, criteria.cartan_zero) == (True, True, False)
    assert "positive definite" in criteria.finding()
    assert Detect.riemannian_criterion(dec, session.cartan, definite=False) is False
    with pytest.raises(InternalInconsistency) as info:
        Detect.riemannian_criterion(dec, session.cartan)
    assert info.value.claim_id == "identity.riemannian_criterion"
    assert info.value.witness == "dlog form True, trace form True, C=0 False"


@pytest.mark.parametrize("name", ["riemann_diag", "kropina", "cubic_root"])
def test_lemmas_hold(sessions, name):
    dec = Detect.detect_ar(sessions(name).md)
    checks = Detect.lemma_checks(dec)
    assert set(checks) == {"lemma.F2_over_eta", "lemma.inverse", "lemma.symmetric_cartan"}
    assert all(checks.values())


@pytest.mark.parametrize("name", ["kropina", "gen_kropina2"])
def test_mean_cartan_closed_forms_are_twice_i(sessions, name):
    session = sessions(name)
    assert not session.mean_cartan.is_zero
    dec = Detect.detect_ar(session.md)
    checks = Detect.mean_cartan_checks(dec, session.mean_cartan)
    assert [c.claim_id for c in checks] == [
        "identity.main_scalar_formula",
        "identity.mean_cartan_closed_form",
    ]
    for check in checks:
        assert not check.holds
        assert check.families[0].factor == "1/2"
        assert check.findings == [f"{check.claim_id}: term family 'I_k' differs (derived/printed = 1/2)"]


def test_mean_cartan_closed_forms_hold_when_riemannian(sessions):
    session = sessions("riemann_diag")
    dec = Detect.detect_ar(session.md)
    assert all(c.holds for c in Detect.mean_cartan_checks(dec, session.mean_cartan))


def test_delta_log_eta_with_landsberg_term(sessions):
    session = sessions("kropina_x")
    dec = Detect.detect_ar(session.md)
    check, rational = Detect.delta_log_eta_check(
        dec, session.barthel, session.berwald_connection, session.landsberg
    )
    assert rational
    assert check.claim_id == "identity.delta_log_eta"
    # g^ij L_ijk = -J_k
    assert check.holds == session.mean_landsberg.is_zero


def test_spray_metric_form_gradient_factor(analyzed):
    item = analyzed("riemann_diag")
    assert (
        "identity.spray_metric_form: term family 'gradient' differs (derived/printed = 1/4)"
        in item.report.findings
    )
    assert item.report["identity.spray_metric_form"].status == "holds"


def test_hcov_metric_is_twice_landsberg(sessions):
    session = sessions("kropina_x")
    assert Detect.hcov_metric_check(session.md, session.metric_hcov, session.landsberg)
