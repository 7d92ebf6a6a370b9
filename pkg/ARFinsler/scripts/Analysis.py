#!/usr/bin/python
# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 by the ARFinsler developers
# Licensed under LGPLv3, see file LICENSE in this source tree.
#
"""
Analysis.py - drives one metric (or the whole catalog) through the engine

Settings precedence: spec-file options, then the values given to
``Analysis(...)`` (command line flags), then ``settings``.

    >>> from ARFinsler.scripts.Analysis import Analysis, catalog_entry
    >>> report = Analysis().run_analysis(catalog_entry("cubic_root"))
    >>> report.ar["theta_deg"]
    2
"""
# --- standard Python modules ---
import typing as t
from contextlib import contextmanager

# --- this application's modules ---
from ..core.ar.Records import VerificationReport
from ..core.ar.Verify import RATIONAL_OBJECTS, Verifier
from ..core.geometry.Pipeline import VolumeForm
from ..core.geometry.Session import OBJECTS, FinslerSession
from ..core.geometry.Tensor import Tensor, scalar_render
from ..core.io.Report import AnalysisReport, CatalogReport, metric_echo
from ..core.io.SpecFile import MetricSpecFile
from ..core.metrics.Catalog import CATALOG, CatalogEntry
from ..core.metrics.Families import FinslerMetric
from ..core.metrics.Sampling import sample_points, sample_positivity
from ..core.utils.config import settings
from ..core.utils.notes import note_and_log
from ..oracle.Oracle import cross_check

# ------------------------------------------------------------------------------

Source = t.Union[MetricSpecFile, CatalogEntry]


def catalog_entry(name: str) -> CatalogEntry:
    try:
        return CATALOG[name]
    except KeyError:
        raise ValueError(f"unknown catalog metric {name!r}, use one of {list(CATALOG)}") from None


class Prepared(t.NamedTuple):
    metric: FinslerMetric
    session: FinslerSession
    description: str
    points: t.List
    cfg: t.Any
    #: positivity sample: the given points topped up to cfg.positivity_points
    positivity: t.List
    expect_ar: t.Optional[bool] = None


@note_and_log
class Analysis(object):
    """
    One runner per invocation. Keyword arguments override ``settings``;
    None means "not given".
    """

    def __init__(self, **overrides):
        self.cfg = settings.merged(**overrides)

    def _cfg_for(self, source: Source):
        if isinstance(source, MetricSpecFile):
            return self.cfg.merged(**source.options)
        return self.cfg

    @contextmanager
    def stage(self, name: str):
        """
        Logs the failing stage and tags the exception with it.
        """
        try:
            yield
        except Exception as error:
            if getattr(error, "stage", None) is None:
                try:
                    error.stage = name
                except AttributeError:
                    pass
            self.log(f"stage {name} failed: {error}", level="error")
            raise

    def prepare(self, source: Source) -> Prepared:
        cfg = self._cfg_for(source)
        with self.stage("metric"):
            if isinstance(source, MetricSpecFile):
                metric = source.build_metric()
                volume = source.volume()
                name = source.name
                description = ""
                points = list(source.points)
                expect_ar = None
            else:
                metric = source.metric()
                volume = VolumeForm(source.volume_sigma(metric.rf))
                name = source.name
                description = source.description
                points = []
                expect_ar = source.expect_ar
        positivity = points + sample_points(
            metric.n, max(0, cfg.positivity_points - len(points)), cfg.seed
        )
        if not points:
            points = sample_points(metric.n, cfg.points, cfg.seed)
        session = FinslerSession(metric.F2, volume, cfg.weyl, name=name)
        return Prepared(metric, session, description, points, cfg, positivity, expect_ar)

    def _report(self, prepared: Prepared, verifier: Verifier, verification: VerificationReport) -> AnalysisReport:
        metric, session = prepared.metric, prepared.session
        echo = metric_echo(metric, prepared.description)
        echo["name"] = session.name
        echo["weyl"] = session.weyl_variant
        echo["sigma"] = session.rf.render(session.volume.sigma)
        facts = verification.facts
        rationality = {}
        for name in ("F2",) + RATIONAL_OBJECTS:
            support = facts.get(f"support.{name}", [])
            rationality[name] = {
                "support": support,
                "verdict": "rational" if support in ([], [0]) else "irrational",
            }
        with self.stage("positivity"):
            warnings = sample_positivity(metric, session.md, prepared.positivity)
        return AnalysisReport(
            metric=echo,
            verification=verification,
            ar=None if verifier.dec is None else verifier.dec.render(),
            rationality=rationality,
            comparisons=[c.to_dict() for c in verifier.comparisons],
            warnings=warnings,
            timing=session.timings,
        )

    def run_analysis(self, source: Source, oracle: bool = False) -> AnalysisReport:
        """
        Full pipeline, AR detection, every claim; the numeric oracle on request.
        """
        prepared = self.prepare(source)
        session = prepared.session
        self.log_title(f"Analysis {session.name}")
        with self.stage("pipeline"):
            session.compute_all()
        verifier = Verifier(session, prepared.metric, prepared.expect_ar)
        with self.stage("verify"):
            verification = verifier.run()
        report = self._report(prepared, verifier, verification)
        if oracle:
            report.oracle = self.run_oracle_prepared(prepared)
        self.note(
            f"{session.name}: {'ok' if report.ok else 'claims fail'}, {len(report.findings)} findings"
        )
        return report

    def run_tensor(self, source: Source, name: str) -> t.Dict[str, str]:
        """
        Rendered components of one object, zero entries omitted.
        """
        if name not in OBJECTS:
            raise ValueError(f"unknown object {name!r}, use one of {', '.join(OBJECTS)}")
        session = self.prepare(source).session
        with self.stage(name):
            value = session.get(name)
        if isinstance(value, Tensor):
            return value.render()
        return scalar_render(value)

    def run_verify(self, source: Source) -> t.Tuple[AnalysisReport, int]:
        "The report and the exit code: 0 when every applicable claim holds."
        report = self.run_analysis(source)
        for failure in report.failures:
            self.log(failure, level="warning")
        return report, 0 if report.ok else 1

    def run_oracle_prepared(self, prepared: Prepared) -> t.Dict[str, t.Any]:
        cfg = prepared.cfg
        with self.stage("oracle"):
            summary = cross_check(
                prepared.session,
                prepared.points,
                precision=cfg.precision,
                tolerance=cfg.tolerance,
                min_points=cfg.min_points,
            )
        return summary.to_dict()

    def run_oracle(self, source: Source) -> t.Tuple[AnalysisReport, int]:
        report = self.run_analysis(source, oracle=True)
        return report, 0 if report.ok else 1

    def run_catalog(self, oracle: bool = False, names: t.Optional[t.Iterable[str]] = None) -> t.Tuple[CatalogReport, int]:
        """
        Every catalog entry (or the named ones), in catalog order.
        """
        out = CatalogReport()
        for name in names or CATALOG:
            out.reports.append(self.run_analysis(catalog_entry(name), oracle=oracle))
        return out, 0 if out.ok else 1
