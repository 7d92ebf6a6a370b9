#!/usr/bin/env python
# -*- coding utf-8 -*-

"""
Metric definition files
"""

from fractions import Fraction
from pathlib import Path

import pytest

from ARFinsler.core.io.ARExceptions import ArityError, ParseError, UnknownKey
from ARFinsler.core.io.SpecFile import parse_expression, parse_metric_file, print_spec

CUBIC = "family=mth_root; m=3; A=y1*y2*y3"

RANDERS = """
# Randers metric on the plane
family = randers
name = plane
alpha = [[1, 0], [0, 1]]
b = [1/2, 0]
point = [[1/2, 1], [1, 2]]
"""

EXTENDED = """
family = extended_mth_root
n = 2
m = 3
mu_111 = y2/(y1 + y2)
mu_122 = 1
mu_222 = 1
"""


def test_one_line_definition():
    spec = parse_metric_file(CUBIC)
    rf = spec.rf
    y1, y2, y3 = rf.y
    assert spec.n == 3
    assert spec.family == "mth_root"
    assert spec.params["m"] == 3
    assert spec.params["A"] == y1 * y2 * y3
    metric = spec.build_metric()
    assert metric.kernel.m == 3
    assert metric.F2 == metric.kernel.theta_power(2)


def test_randers_definition():
    spec = parse_metric_file(RANDERS)
    assert spec.n == 2
    assert spec.name == "plane"
    assert spec.params["b"][0] == spec.rf.const(Fraction(1, 2))
    assert spec.points == [((Fraction(1, 2), 1), (1, 2))]
    metric = spec.build_metric()
    assert metric.family == "randers"
    assert metric.name == "plane"


def test_extended_coefficients():
    spec = parse_metric_file(EXTENDED)
    y1, y2 = spec.rf.y
    assert set(spec.params["mu"]) == {(0, 0, 0), (0, 1, 1), (1, 1, 1)}
    assert spec.params["mu"][(0, 0, 0)] == y2 / (y1 + y2)
    assert spec.build_metric().family == "extended_mth_root"


def test_dimension_from_variables():
    spec = parse_metric_file("family = mth_root\nm = 2\nA = y1^2 + y3^2\n")
    assert spec.n == 3


def test_options_and_volume():
    spec = parse_metric_file(CUBIC + "; sigma = 1 + x1**2; weyl = standard; precision = 80")
    x1 = spec.rf.x[0]
    assert spec.sigma == 1 + x1**2
    assert spec.volume().sigma == 1 + x1**2
    assert spec.options == {"weyl": "standard", "precision": 80}
    assert parse_metric_file(CUBIC + "; weyl = printed").options == {"weyl": "paper"}


def test_negative_exponents():
    spec = parse_metric_file(CUBIC)
    x1 = spec.rf.x[0]
    assert parse_expression("(1 + x1)^-2", spec.rf) == 1 / (1 + x1) ** 2
    assert parse_expression("-x1^2", spec.rf) == -(x1**2)


def test_error_position():
    with pytest.raises(ParseError) as info:
        parse_metric_file("family = mth_root\nm = 3\nA = y1*y2*\n")
    assert info.value.line == 3
    assert info.value.column == 11


@pytest.mark.parametrize(
    "text, error",
    [
        ("family = kropina\nalpha = [[1, 0], [0, 1]]\nb = [1, 0]\nfoo = 3\n", UnknownKey),
        ("family = kropina\nalpha = [[1, 0], [0, 1]]\nb = [1, 0]\nm = 3\n", UnknownKey),
        ("family = kropina\nalpha = [[1, 0], [0, 1]]\nb = [1, 0, 0]\n", ArityError),
        ("family = kropina\nalpha = [[1, 0], [0, 1], [0, 0]]\nb = [1, 0]\n", ArityError),
        ("family = kropina\nalpha = [[1, 0], [0, 1]]\n", ParseError),
        ("m = 3\nA = y1^3\n", ParseError),
        ("family = mth_root\nm = 3\n", ParseError),
        ("family = torus\n", ParseError),
        ("family = mth_root\nm = 3/2\nA = y1*y2*y3\n", ParseError),
        ("family = mth_root\nm = 3\nA = y1*y2*y3\nA = y1^3\n", ParseError),
        ("family = mth_root\nm = 3\nA = y1*z\n", ParseError),
        ("family = mth_root\nm = 3\nA = y1 $ y2\n", ParseError),
        ("family = mth_root\nm = 3\nA = y1/0\n", ParseError),
        ("family = mth_root\nm = 3\nA = y1*y2*y3\nweyl = sideways\n", ParseError),
    ],
)
def test_rejected_definitions(text, error):
    with pytest.raises(error):
        parse_metric_file(text)


@pytest.mark.parametrize("text", [CUBIC, RANDERS, EXTENDED])
def test_print_spec_round_trip(text):
    spec = parse_metric_file(text)
    printed = print_spec(spec)
    again = parse_metric_file(printed)
    assert again.params == spec.params
    assert again.points == spec.points
    assert print_spec(again) == printed


SAMPLES = sorted((Path(__file__).parent.parent / "samples").glob("*.spec"))


@pytest.mark.parametrize("path", SAMPLES, ids=[p.stem for p in SAMPLES])
def test_sample_files_build(path):
    spec = parse_metric_file(path.read_text(encoding="utf-8"))
    metric = spec.build_metric()
    assert metric.name == spec.name
