#!/usr/bin/env python
# -*- coding utf-8 -*-

"""
Metric constructors, the catalog, sampling and the printed closed forms
"""

from fractions import Fraction

import numpy as np
import pytest

from ARFinsler.core.algebra.RatField import rational_function_field
from ARFinsler.core.io.ARExceptions import (
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
from ARFinsler.core.metrics.Catalog import CATALOG, catalog_names
from ARFinsler.core.metrics.Families import (
    OneFormData,
    RiemannData,
    RootData,
    make_gen_kropina,
    make_kropina,
    make_kropina_change,
    make_mth_root,
    make_poly_ab,
    make_randers,
    make_riemannian,
    poly_phi,
)
from ARFinsler.core.metrics.Printed import PrintedForm, TermFamily, compare_printed, printed_forms
from ARFinsler.core.metrics.Sampling import admissible_points, sample_points, sample_positivity

rf = rational_function_field(2)
x1, x2 = rf.x
y1, y2 = rf.y
EUCLID = RiemannData.euclidean(rf)
B = OneFormData.from_values(rf, [1, 0])


def test_randers_lives_in_quadratic_kernel():
    metric = make_randers(EUCLID, OneFormData.from_values(rf, [Fraction(1, 2), 0]))
    alpha2 = y1**2 + y2**2
    assert metric.kernel.m == 2
    assert metric.kernel.A == alpha2
    assert metric.F2.coeffs == (alpha2 + y1**2 / 4, y1)
    assert metric.F2.homogeneity_degree() == 2


def test_randers_norm_is_checked_at_points():
    with pytest.raises(NormViolation):
        make_randers(EUCLID, OneFormData.from_values(rf, [2, 0]), points=[((0, 0), (1, 1))])


def test_gen_kropina():
    metric = make_gen_kropina(EUCLID, B, 2)
    assert metric.family == "gen_kropina"
    assert metric.conic
    assert metric.F2 == metric.kernel.lift((y1**2 + y2**2) ** 3 / y1**4)
    assert make_kropina(EUCLID, B).family == "kropina"


@pytest.mark.parametrize(
    "build, error",
    [
        (lambda: make_gen_kropina(EUCLID, OneFormData.from_values(rf, [0, 0])), ZeroOneForm),
        (lambda: make_gen_kropina(EUCLID, B, Fraction(1, 2)), Unrepresentable),
        (lambda: make_gen_kropina(EUCLID, B, 0), MetricDefinitionError),
        (lambda: make_poly_ab(EUCLID, B, 1, 1, 0, 1), ParityViolation),
        (lambda: make_poly_ab(EUCLID, B, 0, 0, 0, 2), ZeroPolynomial),
        (lambda: make_riemannian(RiemannData.from_rows(rf, [[1, 1], [1, 1]])), Degenerate),
        (lambda: RiemannData.from_rows(rf, [[1, x1], [0, 1]]), ArityError),
        (lambda: RiemannData.from_rows(rf, [[1, 0], [0, y1]]), HomogeneityViolation),
        (lambda: RiemannData.from_rows(rf, [[1, 0, 0], [0, 1, 0], [0, 0, 1]]), ArityError),
        (lambda: OneFormData.from_values(rf, [y1, 0]), HomogeneityViolation),
        (lambda: RootData.from_form(rf, 2, rf.zero), ZeroPolynomial),
        (lambda: RootData.from_form(rf, 2, y1**2 / y2), HomogeneityViolation),
        (lambda: make_mth_root(RootData.from_form(rf, 1, y1)), MetricDefinitionError),
        (lambda: make_kropina_change(make_riemannian(EUCLID), B), MetricDefinitionError),
    ],
)
def test_constructor_errors(build, error):
    with pytest.raises(error):
        build()


def test_poly_phi():
    assert poly_phi(1, 1, 0, 2) == {0: 1, 2: 1}
    assert poly_phi(2, 3, 1, 1) == {1: 5}
    assert poly_phi(1, -1, 2, 2) == {}


def test_poly_ab_is_rational():
    # phi = 1 + s^2, F^2 = (alpha^2 + beta^2)^2 / alpha^2
    metric = make_poly_ab(EUCLID, OneFormData.from_values(rf, [Fraction(1, 2), 0]), 1, 1, 0, 2)
    A = y1**2 + y2**2
    expected = (A + y1**2 / 4) ** 2 / A
    assert metric.F2 == metric.kernel.lift(expected)


def test_root_from_coefficients_uses_multinomials():
    root = RootData.from_coefficients(rf, 3, {(0, 0, 1): 1, (1, 1, 1): 2})
    assert root.A == 3 * y1**2 * y2 + 2 * y2**3
    with pytest.raises(ArityError):
        RootData.from_coefficients(rf, 3, {(0, 1): 1})
    with pytest.raises(HomogeneityViolation):
        RootData.from_coefficients(rf, 2, {(0, 1): y1 / y2 + y1})


def test_extended_root_accepts_degree_zero_coefficients():
    root = RootData.from_coefficients(rf, 3, {(0, 0, 0): y2 / (y1 + y2), (0, 1, 1): 1}, extended=True)
    assert root.extended
    with pytest.raises(HomogeneityViolation):
        RootData.from_coefficients(rf, 3, {(0, 0, 0): y2}, extended=True)


def test_mth_root_and_kropina_change():
    rf3 = rational_function_field(3)
    z1, z2, z3 = rf3.y
    base = make_mth_root(RootData.from_form(rf3, 3, z1 * z2 * z3))
    assert base.F2 == base.kernel.theta_power(2)
    change = make_kropina_change(base, OneFormData.from_values(rf3, [1, 1, 1]), 1)
    assert change.kernel is base.kernel
    assert change.F2 == base.kernel.theta_power(4) / (z1 + z2 + z3) ** 2
    assert change.F2.homogeneity_degree() == 2


def test_catalog_entries_build():
    assert catalog_names() == list(CATALOG)
    for name in ("euclidean2", "randers", "kropina", "cubic_root", "extended_cubic"):
        metric = CATALOG[name].metric()
        assert metric.F2.homogeneity_degree() == 2
    sigma = CATALOG["cubic_root_sigma"].volume_sigma(rational_function_field(3))
    assert sigma == 1 + rational_function_field(3).x[0] ** 2


def test_sample_points_are_seeded():
    first = sample_points(3, 5, seed=7)
    assert first == sample_points(3, 5, seed=7)
    assert first != sample_points(3, 5, seed=8)
    for xs, ys in first:
        assert all(0 < x <= 1 for x in xs)
        assert all(Fraction(5, 16) <= y <= 2 for y in ys)


def test_admissible_points_skip_negative_kernel():
    metric = CATALOG["cubic_root"].metric()
    points = [((0, 0, 0), (1, 1, 1)), ((0, 0, 0), (-1, 1, 1))]
    assert admissible_points(metric, points) == points[:1]


def test_positivity_is_sampled(analyzed):
    item = analyzed("euclidean2")
    assert sample_positivity(item.metric, item.session.md, sample_points(2, 4, 1)) == []


def test_printed_forms_per_family():
    assert [f.name for f in printed_forms(CATALOG["cubic_root"].metric())] == ["mth_root:g", "mth_root:a"]
    assert [f.name for f in printed_forms(CATALOG["shen_circles"].metric())] == ["randers", "shen_circles"]
    assert printed_forms(CATALOG["euclidean2"].metric()) == []


@pytest.mark.parametrize("name, k", [("kropina", 1), ("gen_kropina2", 2)])
def test_gen_kropina_mixed_term_is_misprinted(analyzed, name, k):
    item = analyzed(name)
    form = "kropina" if k == 1 else "gen_kropina"
    comparison = item.comparison(form)
    families = {f.name: f for f in comparison.families}
    assert not comparison.holds
    assert families["alpha"].holds
    assert families["beta-beta"].holds
    # derived -2k(k+1) against printed -k(k+2)
    ratio = Fraction(2 * (k + 1), k + 2)
    assert families["mixed"].factor == rf.render(rf.const(ratio))
    assert f"{form}: term family 'mixed' differs (derived/printed = {ratio})" in item.report.findings


def test_mth_root_printed_forms(analyzed):
    item = analyzed("cubic_root")
    g_form = item.comparison("mth_root:g")
    assert g_form.holds
    assert g_form.dlog_fiber.factor == "3"
    assert g_form.dlog_base.holds
    a_form = item.comparison("mth_root:a")
    families = {f.name: f for f in a_form.families}
    assert not a_form.holds
    assert families["hessian"].holds
    assert families["gradient"].factor == "-1"
    # printed differences never fail a claim
    assert item.report["printed.mth_root:a"].status == "holds"
    assert item.report["printed.mth_root:a"].detail == "corrected form"


def test_irrational_rescale_is_reported(analyzed):
    item = analyzed("cubic_root")
    md = item.session.md
    kernel = md.kernel
    # eta = theta against theta^2: r = theta^-1, outside Q(x, y)
    scaled = np.empty((md.n, md.n), dtype=object)
    for i in range(md.n):
        for j in range(md.n):
            scaled[i, j] = md.g[i, j] * kernel.theta_power(-1)
    form = PrintedForm("theta_eta", kernel.theta_power(1), [TermFamily("all", scaled)])
    comparison = compare_printed(md, item.dec, form)
    assert comparison.holds
    assert comparison.rescale is None
    assert comparison.irrational_rescale.endswith("(theta support [2])")
    assert comparison.findings[0].startswith("theta_eta: printed eta is no rational rescale")
    assert comparison.dlog_fiber is None
