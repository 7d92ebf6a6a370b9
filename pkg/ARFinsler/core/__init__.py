#!/usr/bin/python
# -*- coding: utf-8 -*-
# from . import algebra, ar, geometry, io, metrics
