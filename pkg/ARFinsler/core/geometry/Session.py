#!/usr/bin/python
# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 by the ARFinsler developers
# Licensed under LGPLv3, see file LICENSE in this source tree.
#
"""
Session.py - one metric, every derived object computed at most once

A FinslerSession owns the caches of the pipeline. Objects are produced on
first access, in dependency order, and then shared by detection,
verification, the oracle and the reports. A session is not thread safe.
"""
# --- standard Python modules ---
import typing as t
from functools import cached_property

# --- this application's modules ---
from ..algebra.AlgExt import FieldElem, KernelDesc
from ..utils.notes import note_and_log
from . import Pipeline
from .Pipeline import MetricData, VolumeForm
from .Tensor import Tensor

# ------------------------------------------------------------------------------

#: names accepted by ``FinslerSession.get`` (and the CLI --object flag)
OBJECTS = (
    "F2",
    "g",
    "ginv",
    "C",
    "I",
    "G",
    "N",
    "berwald_connection",
    "berwald_curvature",
    "D",
    "L",
    "J",
    "R",
    "Ric",
    "W",
    "chi",
    "S",
    "E",
)


@note_and_log
class FinslerSession(object):
    """
    Lazily evaluated tensor pipeline for F^2 in K.
    """

    def __init__(
        self,
        F2: FieldElem,
        volume: t.Optional[VolumeForm] = None,
        weyl_variant: str = "paper",
        name: str = "metric",
    ):
        weyl_variant = Pipeline.weyl_variant(weyl_variant)
        self.F2 = F2
        self.kernel: KernelDesc = F2.kernel
        self.rf = self.kernel.rf
        self.n = self.kernel.n
        self.volume = (volume or VolumeForm(self.rf.one)).check(self.rf)
        self.weyl_variant = weyl_variant
        self.name = name
        self.timings: t.Dict[str, float] = {}
        self.log_title(f"Session {name}", args=repr(self.kernel))

    def __repr__(self):
        return f"FinslerSession({self.name}, n={self.n}, {self.kernel!r})"

    @cached_property
    def md(self) -> MetricData:
        with self.timed("g"):
            return Pipeline.fundamental_tensor(self.F2)

    @cached_property
    def cartan(self) -> Tensor:
        with self.timed("C"):
            return Pipeline.cartan(self.md)

    @cached_property
    def mean_cartan(self) -> Tensor:
        with self.timed("I"):
            return Pipeline.mean_cartan(self.md, self.cartan)

    @cached_property
    def spray(self) -> Tensor:
        with self.timed("G"):
            return Pipeline.spray(self.md)

    @cached_property
    def barthel(self) -> Tensor:
        with self.timed("N"):
            return Pipeline.barthel(self.spray)

    @cached_property
    def berwald_connection(self) -> Tensor:
        with self.timed("berwald_connection"):
            return Pipeline.berwald_connection(self.barthel)

    @cached_property
    def berwald_curvature(self) -> Tensor:
        with self.timed("berwald_curvature"):
            return Pipeline.berwald_curvature(self.berwald_connection)

    @cached_property
    def douglas(self) -> Tensor:
        with self.timed("D"):
            return Pipeline.douglas(self.barthel, self.berwald_curvature)

    @cached_property
    def landsberg(self) -> Tensor:
        with self.timed("L"):
            return Pipeline.landsberg(self.md, self.berwald_curvature)

    @cached_property
    def mean_landsberg(self) -> Tensor:
        with self.timed("J"):
            return Pipeline.mean_landsberg(
                self.md, self.landsberg, self.mean_cartan, self.spray, self.barthel
            )

    @cached_property
    def riemann(self) -> Tensor:
        with self.timed("R"):
            return Pipeline.riemann(self.spray, self.barthel, self.berwald_connection)

    @cached_property
    def ricci(self) -> FieldElem:
        with self.timed("Ric"):
            return Pipeline.ricci(self.riemann)

    @cached_property
    def weyl_printed(self) -> Tensor:
        with self.timed("W[printed]"):
            return Pipeline.weyl(self.riemann, self.ricci, "paper")

    @cached_property
    def weyl_standard(self) -> Tensor:
        with self.timed("W[standard]"):
            return Pipeline.weyl(self.riemann, self.ricci, "standard")

    @property
    def weyl(self) -> Tensor:
        if self.weyl_variant == "paper":
            return self.weyl_printed
        return self.weyl_standard

    @cached_property
    def chi(self) -> Tensor:
        with self.timed("chi"):
            return Pipeline.chi(self.riemann, self.ricci)

    @cached_property
    def s_curvature(self) -> FieldElem:
        with self.timed("S"):
            return Pipeline.s_curvature(self.barthel, self.volume)

    @cached_property
    def e_curvature(self) -> Tensor:
        with self.timed("E"):
            return Pipeline.e_curvature(self.s_curvature)

    @cached_property
    def metric_hcov(self) -> Tensor:
        "g_ij|k for the Berwald connection"
        with self.timed("g|"):
            return Pipeline.berwald_hcov(self.md.g, self.barthel, self.berwald_connection)

    def hcov(self, T: Tensor) -> Tensor:
        return Pipeline.berwald_hcov(T, self.barthel, self.berwald_connection)

    def get(self, name: str) -> t.Union[Tensor, FieldElem]:
        """
        Object by its short name (see OBJECTS).
        """
        table = {
            "F2": lambda: self.F2,
            "g": lambda: self.md.g,
            "ginv": lambda: self.md.ginv,
            "C": lambda: self.cartan,
            "I": lambda: self.mean_cartan,
            "G": lambda: self.spray,
            "N": lambda: self.barthel,
            "berwald_connection": lambda: self.berwald_connection,
            "berwald_curvature": lambda: self.berwald_curvature,
            "D": lambda: self.douglas,
            "L": lambda: self.landsberg,
            "J": lambda: self.mean_landsberg,
            "R": lambda: self.riemann,
            "Ric": lambda: self.ricci,
            "W": lambda: self.weyl,
            "chi": lambda: self.chi,
            "S": lambda: self.s_curvature,
            "E": lambda: self.e_curvature,
        }
        try:
            getter = table[name]
        except KeyError:
            raise KeyError(f"unknown object {name!r}, use one of {OBJECTS}") from None
        return getter()

    def compute_all(self):
        for name in OBJECTS:
            self.get(name)
        self.log(f"{self.name}: pipeline complete", level="info")
        return self
