#!/usr/bin/python
# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 by the ARFinsler developers
# Licensed under LGPLv3, see file LICENSE in this source tree.
#
"""
Tensor.py - dense component arrays of field elements
"""
# --- standard Python modules ---
import itertools
import typing as t

# --- 3rd party modules ---
import numpy as np

# --- this application's modules ---
from ..algebra.AlgExt import FieldElem, KernelDesc
from ..io.ARExceptions import ArityError

# ------------------------------------------------------------------------------


class Tensor(object):
    """
    Components T[i, j, ...] (0-based) of a tensor field over K.

    variance is a string of "u"/"l" per slot, for instance "ulll" for the
    Berwald curvature G^i_jkl. symmetries lists groups of slots along which
    the components are totally symmetric; they are verified on construction.
    """

    def __init__(
        self,
        name: str,
        variance: str,
        entries: np.ndarray,
        kernel: KernelDesc,
        symmetries: t.Iterable[t.Tuple[int, ...]] = (),
    ):
        self.name = name
        self.variance = variance
        self.kernel = kernel
        self.symmetries = tuple(tuple(group) for group in symmetries)
        n = kernel.n
        if entries.shape != (n,) * len(variance):
            raise ArityError(
                f"{name}: shape {entries.shape} does not match variance {variance!r} in dimension {n}"
            )
        self.entries = entries
        self._check_symmetries()

    @classmethod
    def build(cls, name, variance, kernel, component, symmetries=()):
        """
        Fill a tensor from component(*index); symmetric slots are computed once.
        """
        n = kernel.n
        rank = len(variance)
        entries = np.empty((n,) * rank, dtype=object)
        cache = {}
        for idx in itertools.product(range(n), repeat=rank):
            key = _canonical(idx, symmetries)
            if key not in cache:
                value = component(*key)
                cache[key] = kernel.lift(value)
            entries[idx] = cache[key]
        return cls(name, variance, entries, kernel, symmetries)

    def _check_symmetries(self):
        for idx in self.indices():
            key = _canonical(idx, self.symmetries)
            if key != idx and self.entries[idx] != self.entries[key]:
                raise ArityError(f"{self.name} is not symmetric at {idx}")

    @property
    def dim(self) -> int:
        return self.kernel.n

    @property
    def rank(self) -> int:
        return len(self.variance)

    def indices(self):
        return itertools.product(range(self.dim), repeat=self.rank)

    def __getitem__(self, idx) -> FieldElem:
        return self.entries[idx]

    def items(self):
        for idx in self.indices():
            yield idx, self.entries[idx]

    def map(self, fn, name=None) -> "Tensor":
        entries = np.empty(self.entries.shape, dtype=object)
        for idx, value in self.items():
            entries[idx] = fn(value)
        return Tensor(name or self.name, self.variance, entries, self.kernel, self.symmetries)

    def __sub__(self, other: "Tensor") -> "Tensor":
        entries = np.empty(self.entries.shape, dtype=object)
        for idx, value in self.items():
            entries[idx] = value - other[idx]
        common = tuple(set(self.symmetries) & set(other.symmetries))
        return Tensor(f"{self.name}-{other.name}", self.variance, entries, self.kernel, common)

    def __eq__(self, other):
        if not isinstance(other, Tensor):
            return NotImplemented
        if self.entries.shape != other.entries.shape:
            return False
        return all(value == other[idx] for idx, value in self.items())

    __hash__ = None

    @property
    def is_zero(self) -> bool:
        return not any(bool(v) for _, v in self.items())

    @property
    def theta_support(self) -> frozenset:
        support = frozenset()
        for _, value in self.items():
            support |= value.theta_support
        return support

    @property
    def is_rational(self) -> bool:
        return self.theta_support <= {0}

    def nonzero(self):
        return [(idx, value) for idx, value in self.items() if value]

    def render(self) -> t.Dict[str, str]:
        """
        Component strings keyed by 1-based index labels, zero entries omitted.
        """
        return {
            _label(idx): value.render() for idx, value in self.items() if value
        }

    def __repr__(self):
        return f"Tensor({self.name}, {self.variance}, n={self.dim})"


def _canonical(idx, symmetries):
    key = list(idx)
    for group in symmetries:
        values = sorted(key[s] for s in group)
        for s, v in zip(group, values):
            key[s] = v
    return tuple(key)


def _label(idx) -> str:
    return ",".join(str(i + 1) for i in idx) if idx else "-"


def scalar_render(value: FieldElem) -> t.Dict[str, str]:
    return {"-": value.render()} if value else {}
