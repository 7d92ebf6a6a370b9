#!/usr/bin/python
# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 by the ARFinsler developers
# Licensed under LGPLv3, see file LICENSE in this source tree.
#
"""
Catalog.py - built-in metric instances

One entry per family instance exercised by ``arfinsler verify --catalog``
and by the test-suite.
"""
# --- standard Python modules ---
import typing as t
from dataclasses import dataclass
from fractions import Fraction

# --- this application's modules ---
from ..algebra.RatField import rational_function_field
from .Families import (
    FinslerMetric,
    OneFormData,
    RiemannData,
    RootData,
    make_gen_kropina,
    make_extended_mth_root,
    make_kropina,
    make_kropina_change,
    make_mth_root,
    make_poly_ab,
    make_randers,
    make_riemannian,
    shen_circles,
)

# ------------------------------------------------------------------------------


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    build: t.Callable[[], FinslerMetric]
    expect_ar: bool
    sigma: t.Optional[str] = None
    description: str = ""

    def metric(self) -> FinslerMetric:
        return self.build()

    def volume_sigma(self, rf):
        if self.sigma is None:
            return rf.one
        from ..io.SpecFile import parse_expression

        return parse_expression(self.sigma, rf)


def _rf(n):
    return rational_function_field(n)


def _euclidean2():
    return make_riemannian(RiemannData.euclidean(_rf(2)), name="euclidean2")


def _riemann_diag():
    rf = _rf(2)
    x1 = rf.x[0]
    return make_riemannian(RiemannData.from_rows(rf, [[1, 0], [0, 1 + x1**2]]), name="riemann_diag")


def _riemann_full():
    rf = _rf(2)
    x1 = rf.x[0]
    return make_riemannian(
        RiemannData.from_rows(rf, [[1, x1], [x1, 1 + x1**2]]), name="riemann_full"
    )


def _randers():
    rf = _rf(2)
    return make_randers(
        RiemannData.euclidean(rf), OneFormData.from_values(rf, [Fraction(1, 2), 0]), name="randers"
    )


def _shen_circles():
    rf = _rf(2)
    return shen_circles(rf, rf.one / (4 + rf.x[0] ** 2))


def _kropina():
    rf = _rf(2)
    return make_kropina(RiemannData.euclidean(rf), OneFormData.from_values(rf, [1, 0]), name="kropina")


def _gen_kropina2():
    rf = _rf(2)
    return make_gen_kropina(
        RiemannData.euclidean(rf), OneFormData.from_values(rf, [1, 0]), 2, name="gen_kropina2"
    )


def _kropina_x():
    rf = _rf(2)
    x1 = rf.x[0]
    return make_kropina(
        RiemannData.from_rows(rf, [[1, 0], [0, 1 + x1**2]]),
        OneFormData.from_values(rf, [1, 0]),
        name="kropina_x",
    )


def _poly(k, m):
    def build():
        rf = _rf(2)
        return make_poly_ab(
            RiemannData.euclidean(rf),
            OneFormData.from_values(rf, [Fraction(1, 2), 0]),
            1,
            1,
            k,
            m,
            name=f"poly_ab_{k}{m}",
        )

    return build


def _cubic_root():
    rf = _rf(3)
    y1, y2, y3 = rf.y
    return make_mth_root(RootData.from_form(rf, 3, y1 * y2 * y3), name="cubic_root")


def _cubic_root_f():
    rf = _rf(3)
    y1, y2, y3 = rf.y
    x1 = rf.x[0]
    return make_mth_root(RootData.from_form(rf, 3, (1 + x1**2) * y1 * y2 * y3), name="cubic_root_f")


def _extended_cubic():
    rf = _rf(2)
    y1, y2 = rf.y
    root = RootData.from_coefficients(
        rf, 3, {(0, 0, 0): y2 / (y1 + y2), (0, 1, 1): 1, (1, 1, 1): 1}, extended=True
    )
    return make_extended_mth_root(root, name="extended_cubic")


def _kropina_change_cubic():
    rf = _rf(3)
    return make_kropina_change(
        _cubic_root(), OneFormData.from_values(rf, [1, 1, 1]), 1, name="kropina_change_cubic"
    )


def _extended_kropina_change():
    rf = _rf(2)
    return make_kropina_change(
        _extended_cubic(), OneFormData.from_values(rf, [1, 0]), 1, name="extended_kropina_change"
    )


CATALOG: t.Dict[str, CatalogEntry] = {
    entry.name: entry
    for entry in (
        CatalogEntry("euclidean2", _euclidean2, True, description="flat plane"),
        CatalogEntry("riemann_diag", _riemann_diag, True, description="diag(1, 1 + x1^2)"),
        CatalogEntry("riemann_full", _riemann_full, True, description="[[1, x1], [x1, 1 + x1^2]]"),
        CatalogEntry("randers", _randers, False, description="Euclidean alpha, b = (1/2, 0)"),
        CatalogEntry("shen_circles", _shen_circles, False, description="A = 1/(4 + x1^2)"),
        CatalogEntry("kropina", _kropina, True, description="k = 1, b = (1, 0)"),
        CatalogEntry("gen_kropina2", _gen_kropina2, True, description="k = 2, b = (1, 0)"),
        CatalogEntry("kropina_x", _kropina_x, True, description="alpha = diag(1, 1 + x1^2)"),
        CatalogEntry("poly_ab_02", _poly(0, 2), True, description="phi = 1 + s^2"),
        CatalogEntry("poly_ab_13", _poly(1, 3), True, description="phi = s + s^3"),
        CatalogEntry("cubic_root", _cubic_root, True, description="A = y1 y2 y3"),
        CatalogEntry("cubic_root_f", _cubic_root_f, True, description="A = (1 + x1^2) y1 y2 y3"),
        CatalogEntry(
            "cubic_root_sigma",
            _cubic_root_f,
            True,
            sigma="1 + x1^2",
            description="cubic_root_f with sigma = 1 + x1^2",
        ),
        CatalogEntry("extended_cubic", _extended_cubic, True, description="mu111 = y2/(y1 + y2)"),
        CatalogEntry("kropina_change_cubic", _kropina_change_cubic, True, description="k = 1, b = (1, 1, 1)"),
        CatalogEntry(
            "extended_kropina_change", _extended_kropina_change, True, description="k = 1, b = (1, 0)"
        ),
    )
}


def catalog_names() -> t.List[str]:
    return list(CATALOG)
