#!/usr/bin/env python
# -*- coding utf-8 -*-

"""
Class loggers, notes and log levels
"""

import logging

import pytest

from ARFinsler.core.utils.notes import convert_level, note_and_log, update_log_level


@note_and_log
class Recorder:
    def __init__(self):
        self.timings = {}


def _levels(cls):
    return {h.get_name(): h.level for h in cls._log.handlers}


@pytest.fixture
def recorder():
    yield Recorder()
    Recorder().clear_notes()
    update_log_level("default", log_this=False)


def test_handlers_by_name(recorder):
    update_log_level("default", log_this=False)
    levels = _levels(Recorder)
    assert levels["stderr"] == logging.CRITICAL
    assert levels["stdout"] == logging.INFO
    assert Recorder._log.name.startswith("ARFinsler_Root.")
    assert Recorder._log.name.endswith(".Recorder")
    assert not Recorder._log.propagate


def test_presets_and_fine_grained(recorder):
    update_log_level("silence", log_this=False)
    assert _levels(Recorder)["stdout"] == logging.CRITICAL
    update_log_level("debug", log_this=False)
    assert _levels(Recorder)["stdout"] == logging.INFO
    update_log_level(stdout="error", stderr="warning", log_this=False)
    levels = _levels(Recorder)
    assert levels["stdout"] == logging.ERROR
    assert levels["stderr"] == logging.WARNING
    update_log_level("Warning", log_this=False)
    assert _levels(Recorder)["stdout"] == logging.WARNING


def test_convert_level():
    assert convert_level("INFO") == logging.INFO
    assert convert_level(logging.ERROR) == logging.ERROR
    assert convert_level(None) is None
    with pytest.raises(ValueError):
        convert_level("loud")


def test_notes_and_timing(recorder):
    recorder.clear_notes()
    recorder.note("first", log=False)
    recorder.note("second", log=False)
    notes = recorder.notes
    texts = [n[1] if isinstance(n, tuple) else n for n in notes]
    assert [text.rsplit(" | ", 1)[1] for text in texts] == ["first", "second"]
    with pytest.raises(ValueError):
        recorder.note("")
    with recorder.timed("g"):
        pass
    assert recorder.timings["g"] >= 0
    recorder.clear_notes()
    assert len(recorder.notes) == 0
