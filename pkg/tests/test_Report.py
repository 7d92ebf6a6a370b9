#!/usr/bin/env python
# -*- coding utf-8 -*-

"""
Analysis reports: text, JSON and the claim table
"""

import dataclasses
import json

import pytest

from ARFinsler.core.io.Report import SCHEMA_VERSION, CatalogReport
from ARFinsler.scripts.Analysis import Analysis, catalog_entry


@pytest.fixture(scope="module")
def kropina_report():
    return Analysis(points=2).run_analysis(catalog_entry("kropina"))


def test_text_report(kropina_report):
    text = kropina_report.to_text()
    assert "\x1b[" not in text
    assert "metric kropina (kropina, n = 2)" in text
    assert "AR: yes, eta = theta^0" in text
    assert "  ar.detect" in text
    assert text.endswith("OK\n")
    assert str(kropina_report) == text


def test_json_fields(kropina_report):
    as_dict = json.loads(kropina_report.to_json())
    assert as_dict["schema"] == SCHEMA_VERSION
    assert as_dict["metric"]["family"] == "kropina"
    assert as_dict["metric"]["kernel"]["m"] == 1
    assert as_dict["ar"]["theta_deg"] == 0
    # a Minkowski metric: the spray vanishes
    assert as_dict["rationality"]["G"] == {"support": [], "verdict": "rational"}
    assert as_dict["rationality"]["F2"]["verdict"] == "rational"
    assert as_dict["oracle"] is None
    assert "timing" not in as_dict
    claims = [c["claim"] for c in as_dict["claims"]]
    assert claims == sorted(claims)
    assert "timing" in kropina_report.to_dict(include_timing=True)


def test_failed_oracle_fails_the_report(kropina_report):
    oracle = {
        "max_relative_error": {"g": "1.0"},
        "geodesic_residual": "0.0",
        "points": 1,
        "skipped": 0,
        "precision": 30,
        "tolerance": "1e-20",
        "passed": False,
    }
    failed = dataclasses.replace(kropina_report, oracle=oracle)
    assert not failed.ok
    assert failed.failures == ["oracle: numeric cross-check exceeds tolerance"]
    text = failed.to_text()
    assert "oracle: FAILED, 1 points, 30 digits, tolerance 1e-20" in text
    assert text.endswith("CLAIMS FAIL\n")
    short = dataclasses.replace(kropina_report, oracle=dict(oracle, points=3, skipped=7, required=10))
    assert short.failures == ["oracle: 3 of 10 required points evaluated (7 skipped)"]


def test_claims_frame(kropina_report):
    pd = pytest.importorskip("pandas")
    frame = kropina_report.claims_frame()
    assert isinstance(frame, pd.DataFrame)
    assert frame.loc["ar.detect", "status"] == "holds"
    assert list(frame.index) == sorted(frame.index)


def test_catalog_report(kropina_report):
    catalog = CatalogReport([kropina_report, kropina_report])
    assert catalog.ok
    assert catalog.failures == []
    as_dict = json.loads(catalog.to_json())
    assert as_dict["schema"] == SCHEMA_VERSION
    assert len(as_dict["metrics"]) == 2
    assert catalog.to_text() == kropina_report.to_text() * 2
