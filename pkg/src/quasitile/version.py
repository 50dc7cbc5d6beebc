#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Quasiperiodic tilings from Coxeter pairs in python: exact 1D quasilattices,
Ammann patterns, their dual tilings and prototile decorations, and the
space groups of the non-crystallographic reflection groups.
"""
__author__ = "pyquasitile contributors"
__copyright__ = "Copyright 2026, pyquasitile contributors"
__version__ = "0.1.0"
