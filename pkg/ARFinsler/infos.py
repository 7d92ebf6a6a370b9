#!/usr/bin/python
# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 by the ARFinsler developers
# Licensed under LGPLv3, see file LICENSE in this source tree.
#
"""
infos.py - ARFinsler Package MetaData
"""

__author__ = "ARFinsler developers"
__version__ = "2026.10.18"
__license__ = "LGPLv3"
