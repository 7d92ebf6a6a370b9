#!/usr/bin/python
# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 by the ARFinsler developers
# Licensed under LGPLv3, see file LICENSE in this source tree.
#
"""
config.py - run settings read from the environment (and .env through dotenv)

Precedence is: spec-file options > command line flags > settings.
"""
# --- standard Python modules ---
import os
from collections import defaultdict

# --- this application's modules ---
from ..geometry.Pipeline import weyl_variant


class config(defaultdict):
    "Simple class to mimic args dot retrieval"

    def __init__(self, cfg):
        super().__init__(lambda: None)
        for k, v in cfg.items():
            self[k] = v

    def __getattr__(self, key):
        try:
            return self[key]
        except KeyError:
            raise AttributeError(key) from None

    def merged(self, **overrides):
        """
        Copy of these settings with every non-None override applied.
        """
        cfg = dict(self)
        cfg.update({k: v for k, v in overrides.items() if v is not None})
        return config(cfg)


def _env(name, default, cast=str):
    value = os.getenv(name)
    if value is None or value == "":
        return default
    try:
        return cast(value)
    except ValueError:
        raise ValueError(f"{name}={value!r} is not a valid {cast.__name__}") from None


def load_settings():
    """
    Read ARFINSLER_* variables. Called again by tests after monkeypatching env.
    """
    try:
        weyl = weyl_variant(_env("ARFINSLER_WEYL", "paper"))
    except ValueError as error:
        raise ValueError(f"ARFINSLER_WEYL: {error}") from None
    return config(
        {
            "weyl": weyl,
            "precision": _env("ARFINSLER_PRECISION", 50, int),
            "points": _env("ARFINSLER_POINTS", 10, int),
            "positivity_points": _env("ARFINSLER_POSITIVITY_POINTS", 20, int),
            "min_points": _env("ARFINSLER_MIN_POINTS", 10, int),
            "seed": _env("ARFINSLER_SEED", 20240917, int),
            "tolerance": _env("ARFINSLER_TOLERANCE", "1e-20"),
            "log_level": _env("ARFINSLER_LOG_LEVEL", "default"),
        }
    )


settings = load_settings()
