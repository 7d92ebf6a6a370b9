#!/usr/bin/env python
# -*- coding utf-8 -*-

"""
The arfinsler command: exit codes, JSON output, object printing
"""

import json

import pytest

from ARFinsler.core.algebra.RatField import rational_function_field
from ARFinsler.core.io.ARExceptions import InternalInconsistency
from ARFinsler.core.io.SpecFile import parse_expression
from ARFinsler.core.utils import config
from ARFinsler.scripts import cli
from ARFinsler.scripts.Analysis import Analysis, catalog_entry

CUBIC = "family = mth_root\nname = cubic\nm = 3\nA = y1*y2*y3\n"


@pytest.fixture
def cubic_spec(tmp_path):
    path = tmp_path / "cubic.spec"
    path.write_text(CUBIC, encoding="utf-8")
    return str(path)


def test_verify_catalog_metric(capsys):
    assert cli.main(["verify", "--catalog", "euclidean2"]) == cli.EXIT_OK
    out = capsys.readouterr().out
    assert "metric euclidean2" in out
    assert out.rstrip().endswith("OK")


def test_verify_spec_file(cubic_spec, capsys):
    assert cli.main(["verify", "--spec", cubic_spec, "--log-level", "silence"]) == cli.EXIT_OK
    out = capsys.readouterr().out
    assert "AR: yes, eta = theta^2" in out


def test_parse_error_exits_2(tmp_path, capsys):
    bad = tmp_path / "bad.spec"
    bad.write_text("family = mth_root\nm = 3\nA = y1*y2*\n", encoding="utf-8")
    assert cli.main(["analyze", "--spec", str(bad)]) == cli.EXIT_INPUT
    err = capsys.readouterr().err
    assert "line 3, column 11" in err


def test_missing_file_exits_2(tmp_path):
    assert cli.main(["verify", "--spec", str(tmp_path / "nowhere.spec")]) == cli.EXIT_INPUT


def test_unknown_catalog_metric_exits_2(capsys):
    assert cli.main(["verify", "--catalog", "torus"]) == cli.EXIT_INPUT
    assert "unknown catalog metric" in capsys.readouterr().err


def test_tensor_needs_one_metric():
    assert cli.main(["tensor", "--catalog", "--object", "G"]) == cli.EXIT_INPUT


def test_internal_inconsistency_exits_3(monkeypatch, capsys):
    def broken(self, source, oracle=False):
        raise InternalInconsistency("identity.test", "two computations disagree")

    monkeypatch.setattr(Analysis, "run_analysis", broken)
    assert cli.main(["verify", "--catalog", "euclidean2"]) == cli.EXIT_INTERNAL
    assert "[identity.test]" in capsys.readouterr().err


def test_failing_claim_exits_1(monkeypatch, capsys):
    original = Analysis.run_analysis

    def failing(self, source, oracle=False):
        report = original(self, source, oracle)
        report.verification.add("theorem.forced", "fails", "hypothesis holds, conclusion fails")
        return report

    monkeypatch.setattr(Analysis, "run_analysis", failing)
    assert cli.main(["verify", "--catalog", "euclidean2"]) == cli.EXIT_CLAIM
    assert "FAIL theorem.forced" in capsys.readouterr().err
    # analyze reports without judging
    assert cli.main(["analyze", "--catalog", "euclidean2"]) == cli.EXIT_OK


def test_json_is_deterministic(tmp_path, cubic_spec):
    first, second = tmp_path / "first.json", tmp_path / "second.json"
    assert cli.main(["analyze", "--spec", cubic_spec, "--json", str(first)]) == cli.EXIT_OK
    assert cli.main(["analyze", "--spec", cubic_spec, "--json", str(second)]) == cli.EXIT_OK
    assert first.read_text() == second.read_text()
    report = json.loads(first.read_text())
    assert report["schema"] == 1
    assert report["ar"]["theta_deg"] == 2
    assert report["metric"]["name"] == "cubic"
    assert report["ok"] is True
    assert "timing" not in report
    claims = {c["claim"]: c["status"] for c in report["claims"]}
    assert claims["ar.detect"] == "holds"


def test_json_timing_on_request(tmp_path):
    path = tmp_path / "timed.json"
    assert cli.main(["analyze", "--catalog", "euclidean2", "--json", str(path), "--timing"]) == 0
    assert "g" in json.loads(path.read_text())["timing"]


def test_tensor_output(capsys):
    assert cli.main(["tensor", "--catalog", "riemann_diag", "--object", "G", "--json", "-"]) == 0
    components = json.loads(capsys.readouterr().out)["G"]
    rf = rational_function_field(2)
    x1 = rf.x[0]
    y1, y2 = rf.y
    assert parse_expression(components["1"], rf) == -x1 * y2**2 / 2
    assert parse_expression(components["2"], rf) == x1 * y1 * y2 / (1 + x1**2)


def test_tensor_prints_zero(capsys):
    assert cli.main(["tensor", "--catalog", "euclidean2", "--object", "R"]) == 0
    assert capsys.readouterr().out.strip() == "R = 0"


def test_oracle_command(capsys):
    code = cli.main(["oracle", "--catalog", "riemann_diag", "--points", "2", "--precision", "40", "--tolerance", "1e-25"])
    assert code == cli.EXIT_OK
    assert "oracle: passed, 2 points" in capsys.readouterr().out


def test_catalog_run_selected_names():
    report, code = Analysis().run_catalog(names=["euclidean2", "kropina"])
    assert code == 0
    as_dict = report.to_dict()
    assert [m["metric"]["name"] for m in as_dict["metrics"]] == ["euclidean2", "kropina"]


def test_analysis_overrides_and_errors():
    analysis = Analysis(weyl="standard", points=3)
    assert analysis.cfg.weyl == "standard"
    assert analysis.cfg.points == 3
    prepared = analysis.prepare(catalog_entry("kropina"))
    assert prepared.session.weyl_variant == "standard"
    assert len(prepared.points) == 3
    with pytest.raises(ValueError):
        analysis.run_tensor(catalog_entry("kropina"), "torsion")
    with pytest.raises(ValueError):
        catalog_entry("torus")


def test_settings_from_environment(monkeypatch):
    monkeypatch.setenv("ARFINSLER_POINTS", "4")
    monkeypatch.setenv("ARFINSLER_WEYL", "Standard")
    cfg = config.load_settings()
    assert cfg.points == 4
    assert cfg.weyl == "standard"
    monkeypatch.setenv("ARFINSLER_WEYL", "other")
    with pytest.raises(ValueError):
        config.load_settings()
    monkeypatch.setenv("ARFINSLER_WEYL", "printed")
    monkeypatch.setenv("ARFINSLER_PRECISION", "many")
    with pytest.raises(ValueError):
        config.load_settings()


def test_weyl_paper_variant(capsys):
    code = cli.main(["tensor", "--catalog", "riemann_diag", "--object", "W", "--weyl", "paper"])
    assert code == cli.EXIT_OK
    assert capsys.readouterr().out.startswith("W")
    assert cli.main(["tensor", "--catalog", "riemann_diag", "--object", "W", "--weyl", "printed"]) == 0
    with pytest.raises(SystemExit):
        cli.main(["tensor", "--catalog", "riemann_diag", "--object", "W", "--weyl", "sideways"])


def test_printed_weyl_is_an_alias():
    prepared = Analysis(weyl="printed").prepare(catalog_entry("kropina"))
    assert prepared.session.weyl_variant == "paper"


def test_positivity_sample_is_separate_from_oracle_points(monkeypatch):
    cfg = config.load_settings()
    assert cfg.positivity_points == 20
    assert cfg.min_points == 10
    prepared = Analysis(points=3).prepare(catalog_entry("kropina"))
    assert len(prepared.points) == 3
    assert len(prepared.positivity) == 20
    assert prepared.positivity[:3] == prepared.points
    monkeypatch.setenv("ARFINSLER_WEYL", "printed")
    assert config.load_settings().weyl == "paper"
