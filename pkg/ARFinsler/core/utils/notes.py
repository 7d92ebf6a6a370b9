# -*- coding: utf-8 -*-
"""
Notes and logger decorator to be used on class.

Decorated classes get a "notes" store, a class logger named
ARFinsler_Root.<module>.<class> and a ``timed`` context manager used to
measure the pipeline stages of a session.

Every class logger carries three handlers, found again by name when the
level changes: "file_handler" (~/.ARFinsler/ARFinsler.log), "stdout" (the
console log) and "stderr" (critical messages only). Both console handlers
write to sys.stderr; stdout belongs to the reports.
"""
import inspect
import logging
import sys
import time
import typing as t

# --- standard Python modules ---
from contextlib import contextmanager
from datetime import datetime
from pathlib import Path

# --- 3rd party modules ---
from ...core.utils.lookfordependency import pandas_if_available, rich_if_available

RICH, rich = rich_if_available()
if RICH:
    from rich.logging import RichHandler

_PANDAS, pd = pandas_if_available()

ROOT_LOGGER = "ARFinsler_Root"
_ANNOUNCER = f"{ROOT_LOGGER}.ARFinsler.scripts.Analysis.Analysis"
LOG_FILE = Path.home() / ".ARFinsler" / "ARFinsler.log"

_FORMAT = logging.Formatter("{asctime} - {levelname:<8}| {message}", style="{")

_LEVELS = {
    "debug": logging.DEBUG,
    "info": logging.INFO,
    "warning": logging.WARNING,
    "error": logging.ERROR,
    "critical": logging.CRITICAL,
}

# handler name -> level, for the named presets of update_log_level
_PRESETS: t.Dict[str, t.Dict[str, int]] = {
    "silence": {
        "file_handler": logging.CRITICAL,
        "stdout": logging.CRITICAL,
        "stderr": logging.CRITICAL,
    },
    "default": {
        "file_handler": logging.WARNING,
        "stdout": logging.INFO,
        "stderr": logging.CRITICAL,
    },
    "debug": {"file_handler": logging.DEBUG, "stdout": logging.INFO},
}


class LogList:
    LOGGERS: t.List[logging.Logger] = []


def convert_level(level: t.Union[str, int, None]) -> t.Optional[int]:
    """
    "warning", "WARNING" or logging.WARNING all give logging.WARNING.
    """
    if not level:
        return None
    if level in _LEVELS.values():
        return level
    try:
        return _LEVELS[str(level).lower()]
    except KeyError:
        raise ValueError(
            f"Wrong log level use one of the following : {list(_LEVELS)}"
        ) from None


def update_log_level(
    level=None, *, log_file=None, stderr=None, stdout=None, log_this=True
):
    """
    Typical usage ::
        # Nothing but critical messages
        ARFinsler.log_level('silence')
        # Info on console, warning in file
        ARFinsler.log_level('default')
        # Debug in the file (per tensor timings), console limited to info
        ARFinsler.log_level('debug')
        # Fine grained
        ARFinsler.log_level(log_file='debug', stdout='warning', stderr='critical')

    A plain level name sets the file and the console log together.
    """
    announcer = logging.getLogger(_ANNOUNCER)
    if level:
        announcer.disabled = str(level).lower() == "silence"
        wanted = _PRESETS.get(str(level).lower())
        if wanted is None:
            lvl = convert_level(level)
            wanted = {"file_handler": lvl, "stdout": lvl}
    else:
        wanted = {
            name: convert_level(value)
            for name, value in (
                ("file_handler", log_file),
                ("stdout", stdout),
                ("stderr", stderr),
            )
            if value
        }

    for logger in LogList.LOGGERS:
        for handler in logger.handlers:
            new_level = wanted.get(handler.get_name())
            if new_level is None:
                continue
            handler.setLevel(new_level)
            if log_this and not announcer.disabled:
                announcer.debug(
                    f"Changed log level of {handler.get_name()} to {logging.getLevelName(new_level)}"
                )


def _console_handler(name: str, level: int) -> logging.Handler:
    if RICH:
        handler = RichHandler(console=rich.console.Console(stderr=True))
    else:
        handler = logging.StreamHandler(sys.stderr)
    handler.set_name(name)
    handler.setLevel(level)
    handler.setFormatter(_FORMAT)
    return handler


def _file_handler(level: int) -> t.Optional[logging.Handler]:
    try:
        LOG_FILE.parent.mkdir(parents=True, exist_ok=True)
        handler = logging.FileHandler(LOG_FILE)
    except OSError:
        # read-only home: console only
        return None
    handler.set_name("file_handler")
    handler.setLevel(level)
    handler.setFormatter(_FORMAT)
    return handler


def note_and_log(cls):
    """
    Class decorator activating logging and storing messages in cls._notes.

    A note can be added to cls._notes without logging if passing
    log=False to note(). Something can be logged without adding a note
    using log(). ``timed(stage)`` logs the elapsed time of a block at
    debug level and keeps it in ``self.timings`` when the instance has one.
    """
    level = convert_level(getattr(cls, "DEBUG_LEVEL", None)) or logging.WARNING

    cls._notes = []
    cls.logname = f"{cls.__module__} | {cls.__name__}"
    cls._log = logging.getLogger(f"{ROOT_LOGGER}.{cls.__module__}.{cls.__name__}")
    # handlers filter, the logger lets everything through
    cls._log.setLevel(logging.DEBUG)
    cls._log.propagate = False

    if not cls._log.handlers:
        fh = _file_handler(level)
        if fh is not None:
            cls._log.addHandler(fh)
        cls._log.addHandler(_console_handler("stderr", logging.CRITICAL))
        cls._log.addHandler(_console_handler("stdout", level))
    LogList.LOGGERS.append(cls._log)

    def _banner(char, heading, args, width):
        cls._log.debug("")
        cls._log.debug(char * width)
        cls._log.debug(heading)
        cls._log.debug(char * width)
        if args:
            cls._log.debug(f"{args!r}")
            cls._log.debug(char * width)

    def log_title(self, title, args=None, width=35):
        _banner("#", f"# {title}", args, width)

    def log_subtitle(self, subtitle, args=None, width=35):
        _banner("=", subtitle, args, width)

    def log(self, note, *, level: t.Union[str, int] = logging.DEBUG):
        """
        Add a log entry...no note
        """
        if not note:
            raise ValueError("Provide something to log")
        level = convert_level(level)
        if level == logging.DEBUG:
            caller = inspect.getmodule(inspect.stack()[1][0])
            where = caller.__name__ if caller else "unknown"
            note = f"{cls.logname} | {where} | {note}"
        cls._log.log(level, note)

    def note(self, note, *, level=logging.INFO, log=True):
        """
        Keep a timestamped note on the class; log it too unless log=False.
        """
        if not note:
            raise ValueError("Provide something to log")
        note = f"{cls.logname} | {note}"
        cls._notes.append((datetime.now().astimezone(), note))
        if log:
            cls._log.log(convert_level(level), note)

    @property
    def notes(self):
        """
        Notes as a pandas Series indexed by timestamp, (timestamp, note) pairs without pandas
        """
        if not _PANDAS:
            return list(cls._notes)
        return pd.Series(
            [text for _, text in cls._notes], index=[when for when, _ in cls._notes]
        )

    def clear_notes(self):
        cls._notes.clear()

    @contextmanager
    def timed(self, stage):
        start = time.perf_counter()
        try:
            yield
        finally:
            elapsed = time.perf_counter() - start
            timings = getattr(self, "timings", None)
            if isinstance(timings, dict):
                timings[stage] = elapsed
            cls._log.debug(f"{cls.logname} | {stage} computed in {elapsed:.3f}s")

    cls.clear_notes = clear_notes
    cls.note = note
    cls.notes = notes
    cls.log = log
    cls.log_title = log_title
    cls.log_subtitle = log_subtitle
    cls.timed = timed
    return cls
