#!/usr/bin/python
# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 by the ARFinsler developers
# Licensed under LGPLv3, see file LICENSE in this source tree.
#
"""
Matrix.py - cofactor determinant and adjugate for small square matrices

Entries only need ring operations, so the same code serves exact field
elements and the numeric jets of the oracle.
"""


def minor(rows, i, j):
    return [row[:j] + row[j + 1 :] for k, row in enumerate(rows) if k != i]


def determinant(rows):
    n = len(rows)
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    total = None
    for j in range(n):
        if not rows[0][j]:
            continue
        term = rows[0][j] * determinant(minor(rows, 0, j))
        if j % 2:
            term = -term
        total = term if total is None else total + term
    if total is None:
        return rows[0][0] - rows[0][0]
    return total


def adjugate(rows, one):
    """
    adj(M)[i][j] = (-1)^(i+j) det(M without row j and column i).
    """
    n = len(rows)
    if n == 1:
        return [[one]]
    adj = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            cofactor = determinant(minor(rows, j, i))
            adj[i][j] = -cofactor if (i + j) % 2 else cofactor
    return adj
