#!/usr/bin/env python
# -*- coding utf-8 -*-

"""
Shared sessions for the engine tests

Building a session and running every claim on it is the slow part, so each
catalog metric is analyzed at most once per test run.
"""

import pytest

from ARFinsler.core.ar.Verify import Verifier
from ARFinsler.core.geometry.Pipeline import VolumeForm
from ARFinsler.core.geometry.Session import FinslerSession
from ARFinsler.core.metrics.Catalog import CATALOG


class Analyzed(object):
    """
    One catalog entry with its metric, session and verification report.
    """

    def __init__(self, name):
        entry = CATALOG[name]
        self.name = name
        self.entry = entry
        self.metric = entry.metric()
        self.session = FinslerSession(
            self.metric.F2, VolumeForm(entry.volume_sigma(self.metric.rf)), name=name
        )
        self.verifier = Verifier(self.session, self.metric)
        self.report = self.verifier.run()

    @property
    def dec(self):
        return self.verifier.dec

    def comparison(self, form_name):
        for comparison in self.verifier.comparisons:
            if comparison.name == form_name:
                return comparison
        raise KeyError(form_name)

    def __repr__(self):
        return f"Analyzed({self.name})"


class Catalog(object):
    def __init__(self):
        self._cache = {}

    def __call__(self, name):
        if name not in self._cache:
            self._cache[name] = Analyzed(name)
        return self._cache[name]


@pytest.fixture(scope="session")
def analyzed():
    """
    analyzed("cubic_root") -> Analyzed, cached for the whole session.
    """
    return Catalog()


@pytest.fixture(scope="session")
def sessions():
    "Bare sessions, nothing computed until a test asks"
    cache = {}

    def get(name):
        if name not in cache:
            entry = CATALOG[name]
            metric = entry.metric()
            cache[name] = FinslerSession(
                metric.F2, VolumeForm(entry.volume_sigma(metric.rf)), name=name
            )
        return cache[name]

    return get
